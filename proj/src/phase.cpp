#include "demat/phase.hpp"

#include <cmath>

#include "demat/errors.hpp"

namespace demat {

const char* to_string(Param p) noexcept {
    switch (p) {
        case Param::k: return "k";
        case Param::epsilon: return "epsilon";
        case Param::pop_growth: return "pop_growth";
        case Param::gdp_growth: return "gdp_growth";
    }
    return "unknown";
}

Param param_from_string(const std::string& name) {
    if (name == "k") return Param::k;
    if (name == "epsilon" || name == "eps") return Param::epsilon;
    if (name == "pop_growth" || name == "pop") return Param::pop_growth;
    if (name == "gdp_growth" || name == "gdp") return Param::gdp_growth;
    throw InvalidArgumentError("unknown parameter '" + name +
                               "' (expected k, epsilon, pop_growth or gdp_growth)");
}

double ParamSet::get(Param p) const noexcept {
    switch (p) {
        case Param::k: return k;
        case Param::epsilon: return epsilon;
        case Param::pop_growth: return pop_growth;
        case Param::gdp_growth: return gdp_growth;
    }
    return 0.0;
}

void ParamSet::set(Param p, double value) noexcept {
    switch (p) {
        case Param::k: k = value; break;
        case Param::epsilon: epsilon = value; break;
        case Param::pop_growth: pop_growth = value; break;
        case Param::gdp_growth: gdp_growth = value; break;
    }
}

namespace {

void validate_axis(const AxisSpec& axis, const char* which) {
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !std::isfinite(axis.step)) {
        throw InvalidArgumentError(std::string(which) + " axis bounds must be finite");
    }
    if (!(axis.min < axis.max)) {
        throw InvalidArgumentError(std::string(which) + " axis needs min < max");
    }
    if (!(axis.step > 0.0)) {
        throw InvalidArgumentError(std::string(which) + " axis needs step > 0");
    }
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidArgumentError(std::string(name) + " must be finite");
    }
}

}  // namespace

void RegionSpec::validate() const {
    if (x_axis.param == y_axis.param) {
        throw InvalidArgumentError("x and y axes must scan different parameters");
    }
    validate_axis(x_axis, "x");
    validate_axis(y_axis, "y");
    require_finite(fixed.k, "fixed k");
    require_finite(fixed.epsilon, "fixed epsilon");
    require_finite(fixed.pop_growth, "fixed pop_growth");
    require_finite(fixed.gdp_growth, "fixed gdp_growth");
}

std::size_t lattice_size(double min, double max, double step) {
    // The relative nudge keeps a lattice whose span is an exact multiple of
    // step from losing its last point to rounding.
    const double span = (max - min) / step;
    return static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
}

double lattice_value(double min, double step, std::size_t i) {
    return min + static_cast<double>(i) * step;
}

std::optional<double> boundary_solve(Param unknown, const ParamSet& known, double floor) {
    require_finite(known.k, "k");
    require_finite(known.epsilon, "epsilon");
    require_finite(known.pop_growth, "pop_growth");
    require_finite(known.gdp_growth, "gdp_growth");
    if (!(floor >= 0.0) || !std::isfinite(floor)) {
        throw InvalidArgumentError("floor must be nonnegative and finite");
    }
    const double k = known.k;
    const double eps = known.epsilon;
    const double pop = known.pop_growth;
    const double gdp = known.gdp_growth;
    switch (unknown) {
        case Param::k: {
            const double denom = 1.0 - eps;
            const double num = pop + eps * gdp;
            if (std::fabs(denom) < floor) return std::nullopt;
            if (eps >= 1.0 && num > 0.0) return std::nullopt;
            return num / denom;
        }
        case Param::epsilon: {
            const double denom = k + gdp;
            if (std::fabs(denom) < floor) return std::nullopt;
            return (k - pop) / denom;
        }
        case Param::gdp_growth: {
            if (std::fabs(eps) < floor) return std::nullopt;
            return (k * (1.0 - eps) - pop) / eps;
        }
        case Param::pop_growth:
            return k * (1.0 - eps) - eps * gdp;
    }
    throw InvalidArgumentError("unknown parameter selector");
}

PhaseGrid classify_grid(const RegionSpec& spec, double tol, std::size_t cell_budget) {
    spec.validate();
    PhaseGrid grid;
    grid.spec = spec;
    grid.nx = lattice_size(spec.x_axis.min, spec.x_axis.max, spec.x_axis.step);
    grid.ny = lattice_size(spec.y_axis.min, spec.y_axis.max, spec.y_axis.step);
    if (grid.nx * grid.ny > cell_budget) {
        throw ResourceLimitError("grid of " + std::to_string(grid.nx) + " x " +
                                 std::to_string(grid.ny) + " cells exceeds the budget of " +
                                 std::to_string(cell_budget));
    }
    grid.cells.reserve(grid.nx * grid.ny);
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
        const double x = lattice_value(spec.x_axis.min, spec.x_axis.step, ix);
        for (std::size_t iy = 0; iy < grid.ny; ++iy) {
            const double y = lattice_value(spec.y_axis.min, spec.y_axis.step, iy);
            ParamSet p = spec.fixed;
            p.set(spec.x_axis.param, x);
            p.set(spec.y_axis.param, y);
            const double index =
                materialization_index({p.pop_growth, p.gdp_growth}, p.k, p.epsilon);
            grid.cells.push_back({x, y, index, classify_index(index, tol)});
        }
    }
    return grid;
}

std::vector<BoundaryPoint> boundary_polyline(const RegionSpec& spec, double floor) {
    spec.validate();
    std::vector<BoundaryPoint> points;
    const std::size_t nx = lattice_size(spec.x_axis.min, spec.x_axis.max, spec.x_axis.step);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = lattice_value(spec.x_axis.min, spec.x_axis.step, ix);
        ParamSet known = spec.fixed;
        known.set(spec.x_axis.param, x);
        const auto y = boundary_solve(spec.y_axis.param, known, floor);
        if (y && std::isfinite(*y)) {
            points.push_back({x, *y});
        }
    }
    return points;
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5a", "fig5b", "fig5c"};
}

RegionSpec preset(const std::string& name) {
    RegionSpec spec;
    spec.name = name;
    if (name == "fig2") {
        spec.x_axis = {Param::gdp_growth, 0.0, 0.08, 0.001};
        spec.y_axis = {Param::pop_growth, 0.0, 0.04, 0.0005};
        spec.fixed.k = 0.05;
        spec.fixed.epsilon = 0.5;
        return spec;
    }
    if (name == "fig3") {
        spec.x_axis = {Param::k, 0.0, 0.3, 0.0025};
        spec.y_axis = {Param::gdp_growth, 0.0, 0.15, 0.00125};
        spec.fixed.pop_growth = 0.01;
        spec.fixed.epsilon = 0.5;
        return spec;
    }
    if (name == "fig4" || name == "fig5a" || name == "fig5b" || name == "fig5c") {
        spec.x_axis = {Param::k, 0.0, 0.7, 0.005};
        if (name == "fig4") {
            spec.y_axis = {Param::epsilon, 0.0, 2.0, 0.02};
            spec.fixed.pop_growth = 0.01;
            spec.fixed.gdp_growth = 0.03;
        } else {
            spec.y_axis = {Param::epsilon, 0.0, 8.0, 0.05};
            if (name == "fig5b") {
                spec.fixed.pop_growth = 0.01;
                spec.fixed.gdp_growth = 0.03;
            } else {
                spec.fixed.pop_growth = 0.02;
                spec.fixed.gdp_growth = 0.05;
            }
        }
        return spec;
    }
    throw InvalidArgumentError("unknown preset '" + name + "' (expected fig2..fig5c)");
}

std::vector<RatePoint> combined_growth_series(const TimeSeries& pop_growth_series,
                                              const TimeSeries& gdp_growth_series,
                                              double epsilon) {
    require_finite(epsilon, "epsilon");
    if (pop_growth_series.kind != SeriesKind::rate || gdp_growth_series.kind != SeriesKind::rate) {
        throw InvalidArgumentError("combined_growth_series expects series of kind rate");
    }
    pop_growth_series.validate();
    gdp_growth_series.validate();

    std::vector<RatePoint> result;
    const auto& pop = pop_growth_series.observations;
    const auto& gdp = gdp_growth_series.observations;
    std::size_t i = 0, j = 0;
    while (i < pop.size() && j < gdp.size()) {
        if (pop[i].year < gdp[j].year) {
            ++i;
        } else if (pop[i].year > gdp[j].year) {
            ++j;
        } else {
            result.push_back({pop[i].year, pop[i].value + epsilon * gdp[j].value});
            ++i;
            ++j;
        }
    }
    if (result.empty()) {
        throw NoOverlapError("series '" + pop_growth_series.label + "' and '" +
                             gdp_growth_series.label + "' share no common years");
    }
    return result;
}

}  // namespace demat
