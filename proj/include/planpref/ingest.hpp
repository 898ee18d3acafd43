#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planpref/common.hpp"

namespace planpref {

// ISO-3166-ish alpha-2 code, two uppercase ASCII letters.
using CountryCode = std::string;

bool valid_country_code(const std::string& s);

// The six cultural dimension scores. Values live in [0, 120]; a missing
// score is an empty optional.
struct CulturalIndices {
    std::optional<double> pdi, idv, mas, uai, ltowvs, ivr;

    bool complete() const { return pdi && idv && mas && uai && ltowvs && ivr; }
    std::optional<double> get(const std::string& name) const;
    static const std::vector<std::string>& names();  // {"pdi","idv","mas","uai","ltowvs","ivr"}
};

struct CulturalRecord {
    CountryCode country;
    CulturalIndices indices;
};

enum class Category { Infrastructure, Demographics, Economic, MarketOpportunity };

Category category_from_string(const std::string& s);
std::string to_string(Category c);

enum class Provenance { Observed, CarriedForward, MeanImputed };

std::string to_string(Provenance p);

// One socio-economic measurement in long form.
struct IndicatorObservation {
    CountryCode country;
    Category category = Category::Economic;
    std::string name;
    int year = 0;
    double value = 0.0;
    Provenance provenance = Provenance::Observed;
};

// A country ready for modeling: complete culture plus one value per
// indicator. Indicator maps are name-ordered, so every profile produced by
// one join carries the identical ordered indicator set.
struct CountryProfile {
    CountryCode country;
    CulturalIndices culture;
    std::map<std::string, double> indicators;
    std::map<std::string, Provenance> provenance;
    std::map<std::string, Category> categories;
};

enum class ImputePolicy { Drop, CarryForward, Mean };

ImputePolicy impute_policy_from_string(const std::string& s);

// Reads "country,pdi,idv,mas,uai,ltowvs,ivr" with one row per country.
// Empty cells, "NA" and "#NULL!" mean missing. Malformed rows raise
// ParseError with the line number; out-of-range scores raise ValidationError
// naming the country and column.
std::vector<CulturalRecord> parse_cultural_csv(const std::string& path);
std::vector<CulturalRecord> parse_cultural_csv_text(const std::string& text);
std::string serialize_cultural_csv(const std::vector<CulturalRecord>& records);

// Reads "country,indicator,year,value" rows, all tagged with one category.
std::vector<IndicatorObservation> parse_socioeconomic_csv(const std::string& path, Category category);
std::vector<IndicatorObservation> parse_socioeconomic_csv_text(const std::string& text, Category category);
std::string serialize_socioeconomic_csv(const std::vector<IndicatorObservation>& obs);

// Keeps the most recent observation per (country, indicator). Equal years:
// the last-parsed row wins and a warning is emitted.
std::vector<IndicatorObservation> filter_most_recent(const std::vector<IndicatorObservation>& obs,
                                                     WarningSink* warnings = nullptr);

// Fills or removes gaps relative to each indicator's most recent year.
// Drop removes stale pairs entirely; carry-forward copies a country's most
// recent earlier value up to the reference year; mean fills countries that
// lack the indicator altogether with the cross-country mean of the latest
// values. required_indicators extends the indicator universe (a required
// indicator with no observed values at all makes mean imputation impossible).
std::vector<IndicatorObservation> impute(const std::vector<IndicatorObservation>& obs,
                                         ImputePolicy policy,
                                         const std::vector<std::string>& required_indicators = {},
                                         WarningSink* warnings = nullptr);

// Inner join of complete cultural rows with full indicator coverage.
// Countries missing any cultural index are dropped, never imputed. An empty
// result raises DataError listing what each candidate country lacked.
std::vector<CountryProfile> join_profiles(const std::vector<CulturalRecord>& cultural,
                                          const std::vector<IndicatorObservation>& observations,
                                          WarningSink* warnings = nullptr);

std::string export_profiles_json(const std::vector<CountryProfile>& profiles);
std::vector<CountryProfile> parse_profiles_json(const std::string& text);

}  // namespace planpref
