#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "planpref/common.hpp"
#include "planpref/ingest.hpp"
#include "planpref/linalg.hpp"
#include "planpref/synthgen.hpp"

namespace planpref {

enum class ColumnKind { Numeric, OneHotMember };

// Dense, fully numeric feature matrix. One-hot members carry the name of the
// categorical column they came from in groups[]; the members of a group sum
// to exactly one in every row.
struct FeatureMatrix {
    std::vector<std::string> names;
    std::vector<ColumnKind> kinds;
    std::vector<std::string> groups;  // "" for plain numeric columns
    std::string target;
    Matrix values;
    std::vector<std::size_t> source_rows;  // original aggregate row per matrix row

    std::size_t col(const std::string& name) const;
    bool has_col(const std::string& name) const;
    std::vector<double> column(std::size_t j) const;
};

void validate_feature_matrix(const FeatureMatrix& m);

// Pre-encoding table: each column is either numeric or categorical labels.
struct RawColumn {
    std::string name;
    bool categorical = false;
    std::vector<double> nums;
    std::vector<std::string> labels;
};

struct RawTable {
    std::vector<RawColumn> cols;
    std::size_t n_rows = 0;
    std::vector<std::size_t> source_rows;

    RawColumn& col(const std::string& name);
    const RawColumn& col(const std::string& name) const;
    bool has_col(const std::string& name) const;
};

// Column layout fed to the model. Everything listed here plus the six
// cultural indices and all profile indicators (numeric) plus the target.
struct FeatureSchema {
    std::vector<std::string> domain_numeric = {"n_accounts", "n_plan_changes", "price_from"};
    std::vector<std::string> domain_categorical = {"country", "left_and_returned", "plan_from",
                                                   "change_year", "change_month"};
    std::string target = "price_to";
};

// Joins each aggregate row with its country profile into one wide table.
RawTable build_raw_table(const std::vector<SubscriberAggregate>& aggregates,
                         const std::vector<CountryProfile>& profiles,
                         const FeatureSchema& schema = {});

// Drops rows whose value in any of the given numeric columns is an outlier:
// further than z_threshold standard deviations from the mean of the other
// rows (leave-one-out, so one extreme value cannot mask itself by inflating
// the column spread). Constant columns never drop rows. Dropping every row
// is an error.
RawTable remove_outliers(const RawTable& table, double z_threshold,
                         const std::vector<std::string>& columns, WarningSink* warnings = nullptr);
FeatureMatrix remove_outliers(const FeatureMatrix& matrix, double z_threshold,
                              WarningSink* warnings = nullptr);

// Learned one-hot vocabulary: column -> labels in lexicographic order.
class OneHotEncoder {
public:
    void fit(const RawTable& table, const std::vector<std::string>& categorical_columns,
             const std::vector<std::size_t>& rows);
    FeatureMatrix apply(const RawTable& table, const std::string& target) const;

    const std::map<std::string, std::vector<std::string>>& vocabulary() const { return vocab_; }
    std::string to_json() const;
    static OneHotEncoder from_json(const std::string& text);

private:
    std::map<std::string, std::vector<std::string>> vocab_;
    std::vector<std::string> column_order_;
};

// Convenience form fitting on all rows of the table.
FeatureMatrix one_hot_encode(const RawTable& table, const std::vector<std::string>& categorical_columns,
                             const std::string& target);

enum class ScaleKind { MinMax, Standardize };

struct ColumnScaler {
    ScaleKind kind = ScaleKind::MinMax;
    bool log_applied = false;  // log1p before scaling
    double a = 0.0;            // min (MinMax) or mean (Standardize)
    double b = 1.0;            // max (MinMax) or population std (Standardize)
};

struct ScalerParams {
    std::map<std::string, ColumnScaler> columns;
};

// Fit scalers over the given rows (training rows in the pipeline).
// Degenerate columns (max == min, or zero std) transform to all zeros and
// emit a warning on fit.
ScalerParams fit_minmax(const FeatureMatrix& m, const std::vector<std::string>& columns,
                        const std::vector<std::string>& log_columns, const std::vector<std::size_t>& rows,
                        WarningSink* warnings = nullptr);
ScalerParams fit_standardize(const FeatureMatrix& m, const std::vector<std::string>& columns,
                             const std::vector<std::size_t>& rows, WarningSink* warnings = nullptr);

// Fit-and-transform on all rows of the matrix.
ScalerParams minmax_scale(FeatureMatrix& m, const std::vector<std::string>& columns,
                          const std::vector<std::string>& log_columns, WarningSink* warnings = nullptr);
ScalerParams standardize(FeatureMatrix& m, const std::vector<std::string>& columns,
                         WarningSink* warnings = nullptr);

// Applies stored parameters to every row. Values outside the fitted range
// extrapolate beyond [0,1]; no clipping. A column missing from the matrix is
// an error.
void apply_scaler(FeatureMatrix& m, const ScalerParams& params);

double scale_value(const ColumnScaler& s, double v);
double unscale_value(const ColumnScaler& s, double v);

std::string scaler_params_to_json(const ScalerParams& p);
ScalerParams scaler_params_from_json(const std::string& text);

struct SplitIndices {
    std::vector<std::size_t> train, val, test;
    std::uint64_t seed = 0;
};

// Seeded uniform shuffle, then contiguous assignment. Part sizes follow the
// largest-remainder rule, so they are within one row of n*ratio each. Any
// empty part is an error.
SplitIndices split(std::size_t n_rows, double train_ratio, double val_ratio, double test_ratio,
                   std::uint64_t seed);

// Feature cache: CSV of the matrix plus a JSON sidecar holding everything
// needed to reuse it (kinds, groups, target, scalers, split, seed).
std::string feature_matrix_to_csv(const FeatureMatrix& m);
struct FeatureCacheMeta {
    FeatureMatrix skeleton;  // names/kinds/groups/target/source_rows, no values
    ScalerParams scalers;
    SplitIndices splits;
    std::uint64_t seed = 0;
};
std::string feature_meta_to_json(const FeatureMatrix& m, const ScalerParams& scalers,
                                 const SplitIndices& splits, std::uint64_t seed);
FeatureMatrix feature_matrix_from_csv_text(const std::string& csv_text);
FeatureCacheMeta feature_meta_from_json(const std::string& text, FeatureMatrix& matrix);

}  // namespace planpref
