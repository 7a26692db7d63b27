#include "demat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "demat/errors.hpp"

namespace demat::svg {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 74.0;
constexpr double kMarginRight = 26.0;
constexpr double kMarginTop = 52.0;
constexpr double kMarginBottom = 62.0;

constexpr const char* kFillMaterializing = "#f2c3bb";
constexpr const char* kFillDematerializing = "#bfe0c6";
constexpr const char* kFillBoundary = "#d8d8d8";

void appendf(std::string& out, const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list again;
    va_copy(again, args);
    char buffer[512];
    const int n = std::vsnprintf(buffer, sizeof(buffer), fmt, args);
    va_end(args);
    if (n > 0) {
        if (static_cast<std::size_t>(n) < sizeof(buffer)) {
            out.append(buffer, static_cast<std::size_t>(n));
        } else {
            std::vector<char> grown(static_cast<std::size_t>(n) + 1);
            std::vsnprintf(grown.data(), grown.size(), fmt, again);
            out.append(grown.data(), static_cast<std::size_t>(n));
        }
    }
    va_end(again);
}

std::string escape_text(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Scale {
    double min = 0.0, max = 1.0, px0 = 0.0, px1 = 1.0;
    double operator()(double v) const { return px0 + (v - min) / (max - min) * (px1 - px0); }
};

std::vector<double> nice_ticks(double lo, double hi, int target) {
    const double range = hi - lo;
    const double raw = range / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag * 10.0;
    for (double m : {1.0, 2.0, 2.5, 5.0}) {
        if (range / (m * mag) <= target + 0.5) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    const long first = static_cast<long>(std::ceil(lo / step - 1e-9));
    for (long i = first; static_cast<double>(i) * step <= hi + step * 1e-9; ++i) {
        ticks.push_back(static_cast<double>(i) * step);
    }
    return ticks;
}

std::string tick_label(double v) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

void append_axes(std::string& out, const Scale& sx, const Scale& sy,
                 const std::string& x_label, const std::string& y_label,
                 const std::string& title) {
    appendf(out,
            "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
            "fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n",
            kMarginLeft, kMarginTop, kWidth - kMarginLeft - kMarginRight,
            kHeight - kMarginTop - kMarginBottom);
    for (double t : nice_ticks(sx.min, sx.max, 7)) {
        const double px = sx(t);
        appendf(out,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#404040\" stroke-width=\"1\"/>\n",
                px, kHeight - kMarginBottom, px, kHeight - kMarginBottom + 5.0);
        appendf(out,
                "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"middle\" "
                "fill=\"#202020\">%s</text>\n",
                px, kHeight - kMarginBottom + 19.0, tick_label(t).c_str());
    }
    for (double t : nice_ticks(sy.min, sy.max, 6)) {
        const double py = sy(t);
        appendf(out,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"#404040\" stroke-width=\"1\"/>\n",
                kMarginLeft - 5.0, py, kMarginLeft, py);
        appendf(out,
                "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"end\" "
                "fill=\"#202020\">%s</text>\n",
                kMarginLeft - 9.0, py + 4.0, tick_label(t).c_str());
    }
    appendf(out,
            "<text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" text-anchor=\"middle\" "
            "fill=\"#202020\">%s</text>\n",
            (kMarginLeft + kWidth - kMarginRight) / 2.0, kHeight - 14.0,
            escape_text(x_label).c_str());
    appendf(out,
            "<text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" text-anchor=\"middle\" "
            "fill=\"#202020\" transform=\"rotate(-90 20 %.2f)\">%s</text>\n",
            20.0, (kMarginTop + kHeight - kMarginBottom) / 2.0,
            (kMarginTop + kHeight - kMarginBottom) / 2.0, escape_text(y_label).c_str());
    if (!title.empty()) {
        appendf(out,
                "<text x=\"%.2f\" y=\"28\" font-size=\"16\" font-weight=\"600\" "
                "text-anchor=\"middle\" fill=\"#101010\">%s</text>\n",
                kWidth / 2.0, escape_text(title).c_str());
    }
}

std::string open_svg() {
    std::string out;
    appendf(out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
            "viewBox=\"0 0 %.0f %.0f\" font-family=\"Helvetica, Arial, sans-serif\">\n",
            kWidth, kHeight, kWidth, kHeight);
    appendf(out, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"#ffffff\"/>\n", kWidth, kHeight);
    appendf(out,
            "<clipPath id=\"plot\"><rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" "
            "height=\"%.2f\"/></clipPath>\n",
            kMarginLeft, kMarginTop, kWidth - kMarginLeft - kMarginRight,
            kHeight - kMarginTop - kMarginBottom);
    return out;
}

const char* fill_for(Classification c) {
    switch (c) {
        case Classification::Dematerializing: return kFillDematerializing;
        case Classification::Boundary: return kFillBoundary;
        case Classification::Materializing: return kFillMaterializing;
    }
    return kFillBoundary;
}

}  // namespace

std::string render_phase_chart(const PhaseGrid& grid,
                               const std::vector<BoundaryPoint>& boundary,
                               const std::vector<PointMarker>& points,
                               const std::string& title) {
    if (grid.cells.size() != grid.nx * grid.ny || grid.nx == 0 || grid.ny == 0) {
        throw InvalidArgumentError("phase grid is empty or inconsistent");
    }
    const auto& spec = grid.spec;
    const Scale sx{spec.x_axis.min, spec.x_axis.max, kMarginLeft, kWidth - kMarginRight};
    const Scale sy{spec.y_axis.min, spec.y_axis.max, kHeight - kMarginBottom, kMarginTop};

    std::string out = open_svg();

    // Regions as per-column runs of equal classification; sample points are
    // treated as centers of step-sized cells clamped to the axis range.
    const double half_x = spec.x_axis.step / 2.0;
    const double half_y = spec.y_axis.step / 2.0;
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.cells[ix * grid.ny].x;
        const double x0 = std::max(spec.x_axis.min, x - half_x);
        const double x1 = std::min(spec.x_axis.max, x + half_x);
        std::size_t iy = 0;
        while (iy < grid.ny) {
            std::size_t run_end = iy;
            const Classification cls = grid.cells[ix * grid.ny + iy].classification;
            while (run_end + 1 < grid.ny &&
                   grid.cells[ix * grid.ny + run_end + 1].classification == cls) {
                ++run_end;
            }
            const double y0 =
                std::max(spec.y_axis.min, grid.cells[ix * grid.ny + iy].y - half_y);
            const double y1 =
                std::min(spec.y_axis.max, grid.cells[ix * grid.ny + run_end].y + half_y);
            appendf(out,
                    "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                    "fill=\"%s\"/>\n",
                    sx(x0), sy(y1), sx(x1) - sx(x0), sy(y0) - sy(y1), fill_for(cls));
            iy = run_end + 1;
        }
    }

    if (!boundary.empty()) {
        std::string path;
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            char seg[64];
            std::snprintf(seg, sizeof(seg), "%c%.2f %.2f", i == 0 ? 'M' : 'L',
                          sx(boundary[i].x), sy(boundary[i].y));
            path += seg;
        }
        appendf(out,
                "<g clip-path=\"url(#plot)\"><path d=\"%s\" fill=\"none\" stroke=\"#303030\" "
                "stroke-width=\"1.8\"/></g>\n",
                path.c_str());
    }

    if (!points.empty()) {
        out += "<g clip-path=\"url(#plot)\">\n";
        for (const auto& p : points) {
            appendf(out,
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3.2\" fill=\"#1f4e86\" "
                    "stroke=\"#ffffff\" stroke-width=\"0.8\"/>\n",
                    sx(p.x), sy(p.y));
        }
        out += "</g>\n";
    }

    append_axes(out, sx, sy, to_string(spec.x_axis.param), to_string(spec.y_axis.param), title);

    const double lx = kWidth - kMarginRight - 168.0;
    appendf(out, "<rect x=\"%.2f\" y=\"%.2f\" width=\"11\" height=\"11\" fill=\"%s\"/>\n",
            lx, kMarginTop - 18.0, kFillMaterializing);
    appendf(out,
            "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" fill=\"#202020\">materializing</text>\n",
            lx + 15.0, kMarginTop - 8.5);
    appendf(out, "<rect x=\"%.2f\" y=\"%.2f\" width=\"11\" height=\"11\" fill=\"%s\"/>\n",
            lx + 92.0, kMarginTop - 18.0, kFillDematerializing);
    appendf(out,
            "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" fill=\"#202020\">dematerializing</text>\n",
            lx + 107.0, kMarginTop - 8.5);

    out += "</svg>\n";
    return out;
}

std::string render_rate_chart(const std::vector<RatePoint>& series, const std::string& title,
                              const std::string& y_label) {
    if (series.size() < 2) {
        throw InvalidArgumentError("rate chart needs at least 2 points");
    }
    double x_min = series.front().year, x_max = series.front().year;
    double y_min = series.front().rate, y_max = series.front().rate;
    for (const auto& p : series) {
        x_min = std::min(x_min, p.year);
        x_max = std::max(x_max, p.year);
        y_min = std::min(y_min, p.rate);
        y_max = std::max(y_max, p.rate);
    }
    if (y_min == y_max) {
        const double pad = std::max(1e-3, std::fabs(y_min) * 0.1);
        y_min -= pad;
        y_max += pad;
    } else {
        const double pad = (y_max - y_min) * 0.06;
        y_min -= pad;
        y_max += pad;
    }
    const Scale sx{x_min, x_max, kMarginLeft, kWidth - kMarginRight};
    const Scale sy{y_min, y_max, kHeight - kMarginBottom, kMarginTop};

    std::string out = open_svg();
    if (y_min < 0.0 && y_max > 0.0) {
        appendf(out,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#b0b0b0\" "
                "stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n",
                kMarginLeft, sy(0.0), kWidth - kMarginRight, sy(0.0));
    }
    std::string path;
    for (std::size_t i = 0; i < series.size(); ++i) {
        char seg[64];
        std::snprintf(seg, sizeof(seg), "%c%.2f %.2f", i == 0 ? 'M' : 'L', sx(series[i].year),
                      sy(series[i].rate));
        path += seg;
    }
    appendf(out,
            "<path d=\"%s\" fill=\"none\" stroke=\"#1f4e86\" stroke-width=\"1.8\"/>\n",
            path.c_str());
    for (const auto& p : series) {
        appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.4\" fill=\"#1f4e86\"/>\n",
                sx(p.year), sy(p.rate));
    }
    append_axes(out, sx, sy, "year", y_label, title);
    out += "</svg>\n";
    return out;
}

}  // namespace demat::svg
