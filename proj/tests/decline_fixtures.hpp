#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "demat/estimate.hpp"

namespace fixtures {

struct LabeledSeries {
    demat::TimeSeries series;
    bool declining = false;
};

inline demat::TimeSeries make_series(const std::string& label, double (*value_at)(int)) {
    demat::TimeSeries s;
    s.label = label;
    s.kind = demat::SeriesKind::consumption;
    for (int t = 0; t <= 50; ++t) {
        s.observations.push_back({1960.0 + t, value_at(t)});
    }
    return s;
}

/// 20 synthetic half-century consumption series: 10 in genuine absolute
/// decline and 10 that are not, including shapes built to trap detectors that
/// look at only one of the two signals. hump_trap ends above its start despite
/// a negative fitted trend; endpoint_crash ends below its start despite a
/// positive fitted trend.
inline std::vector<LabeledSeries> decline_suite() {
    std::vector<LabeledSeries> suite;
    const auto add = [&suite](const char* label, bool declining, double (*f)(int)) {
        suite.push_back({make_series(label, f), declining});
    };

    add("exp_decline_2pct", true, [](int t) { return 100.0 * std::exp(-0.02 * t); });
    add("exp_decline_slow", true, [](int t) { return 50.0 * std::exp(-0.005 * t); });
    add("exp_decline_fast", true, [](int t) { return 200.0 * std::exp(-0.1 * t); });
    add("noisy_decline", true,
        [](int t) { return 80.0 * std::exp(-0.03 * t) * (1.0 + 0.02 * std::sin(double(t))); });
    add("step_down", true, [](int t) { return t < 25 ? 100.0 : 40.0; });
    add("linear_decline", true, [](int t) { return 100.0 - 1.5 * t; });
    add("decline_plateau", true,
        [](int t) { return std::max(100.0 * std::exp(-0.05 * t), 30.0); });
    add("two_stage_decline", true, [](int t) {
        return 100.0 * std::exp(-0.01 * std::min(t, 25) - 0.04 * std::max(0, t - 25));
    });
    add("very_slow_decline", true, [](int t) { return 100.0 * std::exp(-0.001 * t); });
    add("decline_with_spike", true,
        [](int t) { return 100.0 * std::exp(-0.025 * t) * (t == 30 ? 1.5 : 1.0); });

    add("exp_growth", false, [](int t) { return 100.0 * std::exp(0.03 * t); });
    add("constant", false, [](int) { return 100.0; });
    add("hump_trap", false, [](int t) {
        return t <= 2 ? 100.0 * std::exp(1.5 * t)
                      : 100.0 * std::exp(3.0 - 2.5 * (t - 2) / 48.0);
    });
    add("slow_growth", false, [](int t) { return 100.0 * std::exp(0.005 * t); });
    add("u_shape_recovery", false, [](int t) {
        if (t <= 25) return 100.0 * std::exp(-0.05 * t);
        const double ln_low = std::log(100.0) - 1.25;
        const double ln_high = std::log(120.0);
        return std::exp(ln_low + (ln_high - ln_low) * (t - 25) / 25.0);
    });
    add("flat_with_drift", false, [](int t) {
        return 100.0 * std::exp(0.0002 * t) * (1.0 + 0.005 * std::sin(double(t)));
    });
    add("endpoint_crash", false, [](int t) {
        if (t <= 47) return 100.0 * std::exp(0.05 * t);
        const double ln_peak = std::log(100.0) + 2.35;
        const double ln_end = std::log(90.0);
        return std::exp(ln_peak + (ln_end - ln_peak) * (t - 47) / 3.0);
    });
    add("step_up", false, [](int t) { return t < 25 ? 50.0 : 120.0; });
    add("noisy_growth", false,
        [](int t) { return 60.0 * std::exp(0.02 * t) * (1.0 + 0.01 * std::cos(double(t))); });
    add("hump_mild_gain", false, [](int t) {
        return t <= 5 ? 100.0 * std::exp(0.2 * t)
                      : 100.0 * std::exp(1.0 - 0.019 * (t - 5));
    });
    return suite;
}

}  // namespace fixtures
