#pragma once

#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/ingest.hpp"
#include "planpref/linalg.hpp"
#include "planpref/parallel.hpp"
#include "planpref/preprocess.hpp"

namespace planpref {

// Symmetric matrix of Pearson coefficients over named columns. Constant
// columns are flagged degenerate; their off-diagonal entries are 0 and the
// diagonal stays 1.
struct CorrelationMatrix {
    std::vector<std::string> names;
    Matrix r;
    std::vector<bool> degenerate;

    std::size_t col(const std::string& name) const;
};

// Pearson r of two equal-length vectors (n >= 2). Either vector constant
// gives 0 with a warning rather than NaN.
double pearson(const std::vector<double>& x, const std::vector<double>& y,
               WarningSink* warnings = nullptr);

// All-pairs Pearson over the matrix columns, restricted to the given rows
// (empty = all rows; the pipeline passes the training rows so the held-out
// rows never influence feature selection). Needs at least 2 effective rows.
CorrelationMatrix correlation_matrix(const FeatureMatrix& m,
                                     const std::vector<std::size_t>& rows = {},
                                     WarningSink* warnings = nullptr,
                                     parallel::Exec exec = parallel::default_exec());

struct ReductionReport {
    std::vector<std::string> kept;  // feature columns surviving, original order
    struct LowTarget {
        std::string name;
        double r_target = 0.0;
    };
    std::vector<LowTarget> dropped_low_target;
    struct Redundant {
        std::string dropped;
        std::string kept_partner;
        double r_pair = 0.0;
    };
    std::vector<Redundant> dropped_redundant;
};

// Two-stage reduction. Stage 1 drops every feature whose |r| to the target
// falls below t_low. Stage 2 walks the surviving pairs with |r| above
// t_redundant in descending |r| order and drops the member with the weaker
// target correlation (ties drop the lexicographically later name). One-hot
// groups move as a unit: a group is scored by the strongest member, and
// group-vs-unit correlation is the strongest cross-member pair. `groups` is
// parallel to corr.names ("" = ungrouped); pass {} when nothing is grouped.
// The result is a fixed point: re-running on the kept set drops nothing.
ReductionReport reduce_features(const CorrelationMatrix& corr, const std::string& target,
                                double t_low, double t_redundant,
                                const std::vector<std::string>& groups = {});

// Keeps exactly report.kept plus the target column.
FeatureMatrix apply_reduction(const FeatureMatrix& m, const ReductionReport& report);

std::string reduction_report_to_json(const ReductionReport& report);
ReductionReport reduction_report_from_json(const std::string& text);

// Long-format CSV (name_i,name_j,r), one row per matrix entry.
std::string export_heatmap(const CorrelationMatrix& corr);

// Per-country cultural index table plus the C(6,2) pairwise Pearson summary.
struct ScatterExport {
    std::string scatter_csv;  // country,pdi,idv,mas,uai,ltowvs,ivr
    std::string summary_csv;  // index_i,index_j,r
};
ScatterExport scatter_matrix_export(const std::vector<CountryProfile>& profiles,
                                    WarningSink* warnings = nullptr);

double euclidean_distance(const std::vector<double>& p, const std::vector<double>& q);

struct CountryDistance {
    CountryCode country;
    double distance = 0.0;
};

// k nearest neighbours of target by Euclidean distance over the min-max
// scaled profile vector (six cultural indices then indicators by name).
// Ascending distance, ties by country code. k must be below the profile
// count since the target itself is not a neighbour.
std::vector<CountryDistance> nearest_countries(const CountryCode& target,
                                               const std::vector<CountryProfile>& profiles,
                                               std::size_t k);

}  // namespace planpref
