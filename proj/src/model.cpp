#include "demat/model.hpp"

#include <cmath>

#include "demat/errors.hpp"

namespace demat {
namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidArgumentError(std::string(name) + " must be finite");
    }
}

}  // namespace

const char* to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Dematerializing: return "dematerializing";
        case Classification::Boundary: return "boundary";
        case Classification::Materializing: return "materializing";
    }
    return "unknown";
}

std::vector<std::string> validate(const TechnologyTrend& trend) {
    require_finite(trend.improvement_rate, "improvement_rate");
    require_finite(trend.reference_year, "reference_year");
    require_finite(trend.reference_level, "reference_level");
    if (trend.reference_level <= 0.0) {
        throw DomainError("reference_level must be positive");
    }
    std::vector<std::string> warnings;
    if (trend.improvement_rate < 0.0 || trend.improvement_rate > 0.7) {
        warnings.push_back("improvement_rate " + std::to_string(trend.improvement_rate) +
                           " is outside the usual range [0, 0.7]");
    }
    return warnings;
}

std::vector<std::string> validate(const DemandTrend& trend) {
    require_finite(trend.growth_rate, "growth_rate");
    require_finite(trend.reference_year, "reference_year");
    require_finite(trend.reference_demand, "reference_demand");
    if (trend.reference_demand <= 0.0) {
        throw DomainError("reference_demand must be positive");
    }
    return {};
}

std::vector<std::string> validate(const EraContext& era) {
    require_finite(era.pop_growth, "pop_growth");
    require_finite(era.gdp_growth, "gdp_growth");
    std::vector<std::string> warnings;
    auto warn_range = [&](double v, const char* name) {
        if (v < -0.02 || v > 0.10) {
            warnings.push_back(std::string(name) + " " + std::to_string(v) +
                               " is outside the usual range [-0.02, 0.10]");
        }
    };
    warn_range(era.pop_growth, "pop_growth");
    warn_range(era.gdp_growth, "gdp_growth");
    return warnings;
}

std::vector<std::string> validate(const ElasticityPair& elasticities) {
    require_finite(elasticities.income_elasticity, "income_elasticity");
    require_finite(elasticities.price_elasticity, "price_elasticity");
    if (elasticities.equal_assumption &&
        elasticities.income_elasticity != elasticities.price_elasticity) {
        throw InvalidArgumentError(
            "equal_assumption is set but income and price elasticities differ");
    }
    std::vector<std::string> warnings;
    if (elasticities.income_elasticity < 0.0 || elasticities.price_elasticity < 0.0) {
        warnings.push_back("negative demand elasticity");
    }
    return warnings;
}

double project_trend(double rate, double reference_level, double elapsed_years) {
    require_finite(rate, "rate");
    require_finite(reference_level, "reference_level");
    require_finite(elapsed_years, "elapsed_years");
    if (reference_level <= 0.0) {
        throw DomainError("reference_level must be positive");
    }
    return reference_level * std::exp(rate * elapsed_years);
}

double per_capita_usage_rate(double k, const ElasticityPair& elasticities, double gdp_growth) {
    require_finite(k, "k");
    require_finite(gdp_growth, "gdp_growth");
    require_finite(elasticities.income_elasticity, "income_elasticity");
    require_finite(elasticities.price_elasticity, "price_elasticity");
    return -k + elasticities.price_elasticity * k + elasticities.income_elasticity * gdp_growth;
}

double materialization_index(const EraContext& era, double k, double epsilon) {
    require_finite(era.pop_growth, "pop_growth");
    require_finite(era.gdp_growth, "gdp_growth");
    require_finite(k, "k");
    require_finite(epsilon, "epsilon");
    return era.pop_growth - k + epsilon * (k + era.gdp_growth);
}

double materialization_index(const EraContext& era, double k, const ElasticityPair& elasticities) {
    if (!elasticities.equal_assumption) {
        throw InvalidArgumentError(
            "materialization_index requires the equal-elasticity assumption; "
            "pass the chosen epsilon directly to use distinct elasticities");
    }
    return materialization_index(era, k, elasticities.income_elasticity);
}

Classification classify_index(double index, double tol) {
    require_finite(index, "index");
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
        throw InvalidArgumentError("classification tolerance must be nonnegative and finite");
    }
    if (index < -tol) return Classification::Dematerializing;
    if (index > tol) return Classification::Materializing;
    return Classification::Boundary;
}

bool strong_demat_criterion(double per_capita_rate, double pop_growth) {
    require_finite(per_capita_rate, "per_capita_rate");
    require_finite(pop_growth, "pop_growth");
    return per_capita_rate < 0.0 && std::fabs(per_capita_rate) > std::fabs(pop_growth);
}

std::vector<UsagePoint> project_usage(double initial_per_capita, double initial_population,
                                      double per_capita_rate, double pop_growth,
                                      int horizon_years) {
    require_finite(initial_per_capita, "initial_per_capita");
    require_finite(initial_population, "initial_population");
    require_finite(per_capita_rate, "per_capita_rate");
    require_finite(pop_growth, "pop_growth");
    if (initial_per_capita <= 0.0 || initial_population <= 0.0) {
        throw DomainError("initial usage and population levels must be positive");
    }
    if (horizon_years < 1) {
        throw InvalidArgumentError("horizon_years must be at least 1");
    }
    std::vector<UsagePoint> series;
    series.reserve(static_cast<std::size_t>(horizon_years) + 1);
    for (int t = 0; t <= horizon_years; ++t) {
        const double per_capita = initial_per_capita * std::exp(per_capita_rate * t);
        const double total = per_capita * initial_population * std::exp(pop_growth * t);
        series.push_back({t, per_capita, total});
    }
    return series;
}

}  // namespace demat
