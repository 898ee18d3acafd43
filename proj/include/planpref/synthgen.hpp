#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/ingest.hpp"

namespace planpref {

struct Plan {
    std::string label;
    double price = 0.0;
};

// Per-country plan menu, sorted by strictly increasing price.
using PlanCatalog = std::map<CountryCode, std::vector<Plan>>;

void validate_catalog(const PlanCatalog& catalog);
PlanCatalog parse_catalog_json(const std::string& text);
std::string export_catalog_json(const PlanCatalog& catalog);

// One aggregated downgrade cohort row. price_to never exceeds price_from.
struct SubscriberAggregate {
    CountryCode country;
    long n_accounts = 1;
    long n_plan_changes = 1;
    bool left_and_returned = false;
    std::string plan_from;
    double price_from = 0.0;
    std::string plan_to;
    double price_to = 0.0;
    int change_year = 0;
    int change_month = 1;   // 1..12
    long n_same_day_downgrades = 1;  // carried through, not a modeling feature
};

struct SynthConfig {
    std::uint64_t seed = 42;
    std::size_t rows = 1;
    std::vector<CountryCode> countries;
    double noise = 0.15;  // in [0, 1]
    std::map<std::string, double> signal_weights;  // profile feature name -> weight
    // Optional share of rows per country whose taste shock pulls toward the
    // mirrored price point (1 - score). Part of the noise model: the pull is
    // scaled by config.noise, so noise=0 silences it.
    std::map<CountryCode, double> contrarian_share;
    int change_year = 2024;
};

SynthConfig parse_synth_config_json(const std::string& text);
std::string export_synth_config_json(const SynthConfig& config);

struct SynthResult {
    std::vector<SubscriberAggregate> aggregates;
    std::vector<std::string> ground_truth;  // true plan label per row index
};

// Draws each row's true plan from a softmax over per-plan utilities. The
// utility is a sharpness-scaled distance between the country's signal score
// (the signal-weight dot product with its min-max-scaled profile, normalized
// across the configured countries) and the plan's scaled price position,
// perturbed by a noise term scaled by config.noise: per-plan Gumbel shocks,
// plus, for a seeded contrarian_share of each country's rows, a pull toward
// the mirrored score 1 - score. Taking the argmax of the perturbed utilities
// is exactly a softmax draw, and noise=0 degenerates to the deterministic
// argmax plan per country.
SynthResult generate(const SynthConfig& config, const std::vector<CountryProfile>& profiles,
                     const PlanCatalog& catalog);

// The country -> signal-score positions used by generate, exposed for tests
// and calibration (score in [0,1], plus the argmax plan at zero noise).
struct CountrySignal {
    CountryCode country;
    double score = 0.0;
    std::string argmax_plan;
};
std::vector<CountrySignal> country_signals(const SynthConfig& config,
                                           const std::vector<CountryProfile>& profiles,
                                           const PlanCatalog& catalog);

std::string aggregates_csv_header();
std::string export_aggregates_csv(const std::vector<SubscriberAggregate>& rows);
std::vector<SubscriberAggregate> parse_aggregates_csv(const std::string& path);
std::vector<SubscriberAggregate> parse_aggregates_csv_text(const std::string& text);

std::string export_ground_truth_csv(const std::vector<std::string>& labels);
std::vector<std::string> parse_ground_truth_csv_text(const std::string& text);

}  // namespace planpref
