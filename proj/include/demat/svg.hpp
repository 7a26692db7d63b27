#pragma once

#include <string>
#include <vector>

#include "demat/phase.hpp"

namespace demat::svg {

struct PointMarker {
    double x = 0.0;
    double y = 0.0;
};

/// Static chart of a classified phase grid: shaded regions, the analytic
/// boundary curve and optional case markers. Output is plain SVG text with no
/// external references and no volatile content, so identical inputs render
/// byte-identical files.
std::string render_phase_chart(const PhaseGrid& grid,
                               const std::vector<BoundaryPoint>& boundary,
                               const std::vector<PointMarker>& points = {},
                               const std::string& title = "");

/// Line chart of a yearly rate series.
std::string render_rate_chart(const std::vector<RatePoint>& series,
                              const std::string& title,
                              const std::string& y_label);

}  // namespace demat::svg
