#include "demat/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "demat/errors.hpp"

namespace demat {

const char* to_string(SeriesKind kind) noexcept {
    switch (kind) {
        case SeriesKind::price: return "price";
        case SeriesKind::demand: return "demand";
        case SeriesKind::gdp_per_capita: return "gdp_per_capita";
        case SeriesKind::population: return "population";
        case SeriesKind::consumption: return "consumption";
        case SeriesKind::rate: return "rate";
    }
    return "unknown";
}

SeriesKind series_kind_from_string(const std::string& name) {
    if (name == "price") return SeriesKind::price;
    if (name == "demand") return SeriesKind::demand;
    if (name == "gdp_per_capita") return SeriesKind::gdp_per_capita;
    if (name == "population") return SeriesKind::population;
    if (name == "consumption") return SeriesKind::consumption;
    if (name == "rate") return SeriesKind::rate;
    throw InvalidArgumentError("unknown series kind '" + name + "'");
}

void TimeSeries::validate() const {
    if (observations.size() < 2) {
        throw InsufficientDataError("series '" + label + "' has " +
                                    std::to_string(observations.size()) +
                                    " observations; at least 2 are required");
    }
    const Observation* prev = nullptr;
    for (const auto& obs : observations) {
        if (!std::isfinite(obs.year) || !std::isfinite(obs.value)) {
            throw InvalidArgumentError("non-finite observation in series '" + label + "'");
        }
        if (prev && obs.year <= prev->year) {
            throw MalformedSeriesError("years not strictly increasing at year " +
                                       std::to_string(obs.year) + " in series '" + label + "'");
        }
        if (kind != SeriesKind::rate && obs.value <= 0.0) {
            throw DomainError("value <= 0 at year " + std::to_string(obs.year) +
                              " in series '" + label + "'");
        }
        prev = &obs;
    }
}

ExponentialFit fit_exponential(const TimeSeries& series) {
    series.validate();
    const auto n = series.observations.size();
    std::vector<double> xs(n), ys(n);
    const double first_year = series.observations.front().year;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& obs = series.observations[i];
        if (obs.value <= 0.0) {
            throw DomainError("value <= 0 at year " + std::to_string(obs.year) +
                              " in series '" + series.label + "'");
        }
        xs[i] = obs.year - first_year;
        ys[i] = std::log(obs.value);
    }

    ExponentialFit fit;
    fit.n_points = static_cast<int>(n);

    // A bitwise-constant target is a perfect fit of a constant; the general
    // path would divide two rounding residues and report garbage r_squared.
    if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); })) {
        fit.rate = 0.0;
        fit.ln_intercept = ys.front();
        fit.r_squared = 1.0;
        return fit;
    }

    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        sxx += dx * dx;
        sxy += dx * (ys[i] - y_mean);
    }
    fit.rate = sxy / sxx;
    fit.ln_intercept = y_mean - fit.rate * x_mean;

    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dy = ys[i] - y_mean;
        const double res = ys[i] - (fit.ln_intercept + fit.rate * xs[i]);
        ss_tot += dy * dy;
        ss_res += res * res;
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
    return fit;
}

double elasticity_from_rates(double g, double k, double gdp_growth, double floor) {
    if (!std::isfinite(g) || !std::isfinite(k) || !std::isfinite(gdp_growth)) {
        throw InvalidArgumentError("g, k and gdp_growth must be finite");
    }
    if (!(floor >= 0.0) || !std::isfinite(floor)) {
        throw InvalidArgumentError("denominator floor must be nonnegative and finite");
    }
    const double denom = k + gdp_growth;
    if (std::fabs(denom) < floor) {
        throw SingularDenominatorError(
            "k + gdp_growth is too close to zero to divide by (|" +
            std::to_string(denom) + "| below the floor)");
    }
    return g / denom;
}

double log10_rate_to_ln(double rate_log10) {
    if (!std::isfinite(rate_log10)) {
        throw InvalidArgumentError("rate must be finite");
    }
    return rate_log10 * std::log(10.0);
}

double ln_rate_to_log10(double rate_ln) {
    if (!std::isfinite(rate_ln)) {
        throw InvalidArgumentError("rate must be finite");
    }
    return rate_ln / std::log(10.0);
}

}  // namespace demat
