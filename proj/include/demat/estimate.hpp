#pragma once

#include <string>
#include <vector>

namespace demat {

enum class SeriesKind { price, demand, gdp_per_capita, population, consumption, rate };

const char* to_string(SeriesKind kind) noexcept;
SeriesKind series_kind_from_string(const std::string& name);

struct Observation {
    double year = 0.0;
    double value = 0.0;
};

/// Ordered yearly observations of one quantity. Values must be positive
/// (log-transformable) except for kind == rate, which holds growth rates and
/// is only consumed by rate arithmetic, never fitted.
struct TimeSeries {
    std::vector<Observation> observations;
    std::string label;
    SeriesKind kind = SeriesKind::consumption;

    /// Throws when the invariants do not hold: at least two observations,
    /// strictly increasing years, finite values, positive values unless rate.
    void validate() const;
};

/// Least-squares exponential trend through a series.
struct ExponentialFit {
    double rate = 0.0;         ///< slope of ln(value) against year, 1/yr
    double ln_intercept = 0.0; ///< ln(value) at the first observed year
    double r_squared = 1.0;
    int n_points = 0;
};

/// Smallest |k + gdp_growth| accepted when dividing by it.
inline constexpr double kDefaultDenominatorFloor = 1e-9;

/// Ordinary least squares on (year - first_year, ln value). For price series
/// the improvement rate is the negated slope; the caller applies that sign.
ExponentialFit fit_exponential(const TimeSeries& series);

/// Demand elasticity implied by observed trend rates: g / (k + gdp_growth),
/// the common value of the income and price elasticities when taken as equal.
double elasticity_from_rates(double g, double k, double gdp_growth,
                             double floor = kDefaultDenominatorFloor);

/// Converts a base-10 log annual rate to a natural-log annual rate.
double log10_rate_to_ln(double rate_log10);
double ln_rate_to_log10(double rate_ln);

}  // namespace demat
