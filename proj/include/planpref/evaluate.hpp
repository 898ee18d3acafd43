#pragma once

#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/preprocess.hpp"
#include "planpref/synthgen.hpp"

namespace planpref {

// One-vs-rest confusion counts per class; tp+fp+fn+tn equals the sample
// count for every class.
struct ConfusionCounts {
    std::vector<std::string> classes;
    std::vector<std::size_t> tp, fp, fn, tn;
    std::size_t n_samples = 0;
};

enum class Averaging { Binary, WeightedMacro };

struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    Averaging averaging = Averaging::WeightedMacro;
    std::vector<std::string> classes;
    std::vector<std::size_t> support;  // true-sample count per class
};

// Maps a model's scaled price output back to a plan: unscale through the
// target scaler, then take the catalog plan with the nearest price. An exact
// midpoint goes to the cheaper plan, matching the downgrade cohort bias.
std::string price_to_class(double predicted_scaled_price, const PlanCatalog& catalog,
                           const CountryCode& country, const ScalerParams& scaler,
                           const std::string& target = "price_to");

ConfusionCounts confusion(const std::vector<std::string>& predicted,
                          const std::vector<std::string>& truth,
                          const std::vector<std::string>& classes);

// Direct evaluation of the four metrics on a single one-vs-rest table; any
// zero denominator yields 0 for that metric.
MetricsReport binary_metrics(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn);

// Binary mode reads the first class's table. Weighted-macro averages
// per-class precision/recall/f1 by support, with accuracy = correct / n.
MetricsReport metrics(const ConfusionCounts& counts, Averaging averaging);

// The two equivalent F1 forms, kept separate so their identity is testable.
double f1_from_counts(std::size_t tp, std::size_t fp, std::size_t fn);
double f1_from_pr(double precision, double recall);

struct ModelRun {
    std::string name;
    std::string features;  // "full" or "select"
    MetricsReport metrics;
};

struct ComparisonTable {
    std::string text;      // aligned, human-oriented
    std::string csv_text;  // model,features,accuracy,f1,precision,recall
};

// Rows sorted by accuracy descending (ties by name).
ComparisonTable compare_models(const std::vector<ModelRun>& runs);

// Externally reported results shipped for side-by-side context in the
// comparison table. Display-only: nothing in this codebase recomputes or
// asserts them.
std::vector<ModelRun> reference_rows();

std::string metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const std::string& text);

}  // namespace planpref
