#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "demat/estimate.hpp"
#include "demat/model.hpp"

namespace demat {

enum class Category { chemicals, hardware, energy };

const char* to_string(Category c) noexcept;
Category category_from_string(const std::string& name);

/// One technology case: its observation period plus the fitted demand growth
/// rate g and technical improvement rate k. Reference elasticity and index
/// columns are carried along when the source table provides them.
struct CaseRecord {
    std::string name;
    Category category = Category::chemicals;
    int start_year = 0;
    int end_year = 0;
    double g = 0.0;
    double k = 0.0;
    std::optional<double> epsilon_expected;
    std::optional<double> index_expected;
};

struct CaseAssessment {
    CaseRecord record;
    EraContext era;
    double epsilon = 0.0;
    double index = 0.0;
    Classification classification = Classification::Boundary;
};

/// Outcome of the absolute-decline test on a consumption series: the fitted
/// trend must slope down AND the last observation must sit below the first.
struct DeclineVerdict {
    std::string label;
    double fitted_rate = 0.0;
    double endpoint_ratio = 1.0; ///< last value / first value
    bool declining = false;
};

// Era rule backing the bundled dataset: population growth 0.02 throughout;
// per-capita GDP growth 0.05 for cases ending by the split year, 0.03 after.
inline constexpr double kEraPopGrowth = 0.02;
inline constexpr double kEarlyEraGdpGrowth = 0.05;
inline constexpr double kModernEraGdpGrowth = 0.03;
inline constexpr int kEraSplitEndYear = 1975;

/// Reads a case table (see the README for the format). Accepts either
/// start_year/end_year columns or a single period column of the form
/// `start-end`. Warnings (duplicate names kept, for instance) are appended to
/// *warnings when given.
std::vector<CaseRecord> load_cases(const std::string& path,
                                   std::vector<std::string>* warnings = nullptr);

EraContext era_for(const CaseRecord& record, int split_end_year = kEraSplitEndYear);

/// Elasticity from the record's rates, index from the criterion, classification
/// from the index.
CaseAssessment assess_case(const CaseRecord& record, const EraContext& era,
                           double classify_tol = kDefaultClassifyTol);

struct ReplicationTolerances {
    double epsilon_tol = 1e-4;
    double index_tol = 1e-6;
};

struct RowDeviation {
    std::string name;
    double epsilon = 0.0;
    double epsilon_expected = 0.0;
    double epsilon_deviation = 0.0;
    double index = 0.0;
    double index_expected = 0.0;
    double index_deviation = 0.0;
    Classification classification = Classification::Boundary;
    bool within = false;
};

struct ReplicationReport {
    std::vector<RowDeviation> rows;   ///< input order preserved
    std::size_t n_dematerializing = 0;
    std::size_t n_boundary = 0;
    std::size_t n_materializing = 0;
    double max_epsilon_deviation = 0.0;
    double max_index_deviation = 0.0;
    bool pass = false;
};

struct ExpectedRow {
    std::string name;
    double epsilon = 0.0;
    double index = 0.0;
};

/// Pulls the reference columns out of records loaded from a table that has
/// them; throws ReportError when any record lacks them.
std::vector<ExpectedRow> expected_rows(const std::vector<CaseRecord>& records);

/// Recomputes every record and compares against the reference values by name.
/// Passes when every row matches within tolerance and no row classifies as
/// dematerializing or boundary.
ReplicationReport replicate_tables(const std::vector<CaseRecord>& records,
                                   const std::vector<ExpectedRow>& expected,
                                   const ReplicationTolerances& tolerances = {},
                                   int era_split_end_year = kEraSplitEndYear);

/// Renders the report as delimited text ending in a machine-readable
/// PASS or FAIL line.
std::string render_replication_report(const ReplicationReport& report);

DeclineVerdict detect_absolute_decline(const TimeSeries& series);

}  // namespace demat
