#pragma once

#include <string>
#include <vector>

namespace demat {

/// Ternary outcome of the materialization criterion.
enum class Classification { Dematerializing, Boundary, Materializing };

const char* to_string(Classification c) noexcept;

/// Tolerance used to resolve the strict inequality at the region boundary.
/// Indices within +/- tol of zero classify as Boundary.
inline constexpr double kDefaultClassifyTol = 1e-12;

/// Exponential improvement trend of a technology metric (performance per cost,
/// or cost itself with the sign of the rate flipped by the caller).
struct TechnologyTrend {
    double improvement_rate = 0.0;  ///< continuous annual rate k, 1/yr
    double reference_level = 1.0;   ///< metric value at reference_year, must be > 0
    double reference_year = 0.0;
};

/// Exponential demand trend.
struct DemandTrend {
    double growth_rate = 0.0;      ///< continuous annual rate g, 1/yr
    double reference_demand = 1.0; ///< demand at reference_year, must be > 0
    double reference_year = 0.0;
};

/// Background growth environment a case is evaluated against.
struct EraContext {
    double pop_growth = 0.0; ///< d ln population / dt, 1/yr
    double gdp_growth = 0.0; ///< d ln per-capita GDP / dt, 1/yr
};

/// Income and price elasticities of demand. The simplifying assumption that the
/// two are equal is recorded explicitly so downstream checks can insist on it.
struct ElasticityPair {
    double income_elasticity = 0.0;
    double price_elasticity = 0.0;
    bool equal_assumption = false;

    static ElasticityPair equal(double epsilon) { return {epsilon, epsilon, true}; }
};

struct DematAssessment {
    double epsilon = 0.0;
    double index = 0.0;
    Classification classification = Classification::Boundary;
};

/// One yearly sample of projected material usage.
struct UsagePoint {
    int year_offset = 0;
    double per_capita_usage = 0.0;
    double total_usage = 0.0;
};

// Validation helpers. Hard violations (non-finite fields, nonpositive levels)
// throw; soft range violations come back as human-readable warnings.
std::vector<std::string> validate(const TechnologyTrend& trend);
std::vector<std::string> validate(const DemandTrend& trend);
std::vector<std::string> validate(const EraContext& era);
std::vector<std::string> validate(const ElasticityPair& elasticities);

/// Evaluates reference_level * exp(rate * elapsed_years).
double project_trend(double rate, double reference_level, double elapsed_years);

/// Continuous annual rate of per-capita material usage:
///   -k + price_elasticity * k + income_elasticity * gdp_growth.
/// The price term is the rebound: demand recovered because improvement makes
/// the delivered function cheaper. With both elasticities zero the result is
/// exactly -k, pure efficiency gain.
double per_capita_usage_rate(double k, const ElasticityPair& elasticities, double gdp_growth);

/// Left-hand side of the absolute dematerialization criterion:
///   pop_growth - k + epsilon * (k + gdp_growth).
/// Negative means total usage of the material falls in absolute terms.
double materialization_index(const EraContext& era, double k, double epsilon);

/// Same criterion evaluated through an ElasticityPair; requires the pair to
/// carry the equal-elasticity assumption. Callers that deliberately want
/// distinct elasticities must pick the value to use and call the scalar form.
double materialization_index(const EraContext& era, double k, const ElasticityPair& elasticities);

Classification classify_index(double index, double tol = kDefaultClassifyTol);

/// True when per-capita usage falls fast enough to overcome population growth,
/// so total usage declines: per_capita_rate < 0 and |per_capita_rate| > |pop_growth|.
bool strong_demat_criterion(double per_capita_rate, double pop_growth);

/// Yearly samples of the closed-form usage path for t = 0..horizon_years:
/// per-capita usage initial_per_capita * exp(per_capita_rate * t) and total
/// usage obtained by multiplying in population initial_population * exp(pop_growth * t).
std::vector<UsagePoint> project_usage(double initial_per_capita, double initial_population,
                                      double per_capita_rate, double pop_growth,
                                      int horizon_years);

}  // namespace demat
