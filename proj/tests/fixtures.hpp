#pragma once

#include <cmath>
#include <random>

#include "demat/estimate.hpp"

namespace fixtures {

/// Uniform draw in [0, 1) from raw engine output; uniform_real_distribution is
/// implementation-defined, this is reproducible everywhere.
inline double uniform01(std::mt19937& rng) {
    return static_cast<double>(rng()) * (1.0 / 4294967296.0);
}

inline double uniform_in(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// 31-point exponential with generating rate 0.0767 and multiplicative noise
/// within +/-1%. The generating rate is the oracle; any noise draw this size
/// perturbs the least-squares slope by well under 0.001.
inline demat::TimeSeries noisy_exponential_series(unsigned seed = 12345u) {
    std::mt19937 rng(seed);
    demat::TimeSeries s;
    s.label = "noisy_exponential";
    s.kind = demat::SeriesKind::demand;
    for (int t = 0; t <= 30; ++t) {
        const double noise = 1.0 + 0.01 * (2.0 * uniform01(rng) - 1.0);
        s.observations.push_back({1980.0 + t, 3.0 * std::exp(0.0767 * t) * noise});
    }
    return s;
}

inline constexpr double kNoisyGeneratingRate = 0.0767;

}  // namespace fixtures
