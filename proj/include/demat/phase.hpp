#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "demat/estimate.hpp"
#include "demat/model.hpp"

namespace demat {

/// The four parameters of the materialization criterion.
enum class Param { k, epsilon, pop_growth, gdp_growth };

const char* to_string(Param p) noexcept;
Param param_from_string(const std::string& name);

/// Values for all four criterion parameters. Region scans overwrite the two
/// axis slots per cell and keep the other two fixed.
struct ParamSet {
    double k = 0.0;
    double epsilon = 0.0;
    double pop_growth = 0.0;
    double gdp_growth = 0.0;

    double get(Param p) const noexcept;
    void set(Param p, double value) noexcept;
};

struct AxisSpec {
    Param param = Param::k;
    double min = 0.0;
    double max = 1.0;
    double step = 0.01;
};

struct RegionSpec {
    AxisSpec x_axis;
    AxisSpec y_axis;
    ParamSet fixed;     ///< axis slots are ignored
    std::string name;   ///< preset name, empty for ad-hoc specs

    void validate() const;
};

struct PhaseCell {
    double x = 0.0;
    double y = 0.0;
    double index = 0.0;
    Classification classification = Classification::Boundary;
};

/// Sampled classification of the criterion over a parameter rectangle.
/// Cells are stored x-major: cells[ix * ny + iy], both axes ascending.
struct PhaseGrid {
    RegionSpec spec;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<PhaseCell> cells;
};

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

/// Number of lattice samples for a min/max/step axis, robust against the
/// floating-point shortfall at (max - min) / step.
std::size_t lattice_size(double min, double max, double step);
double lattice_value(double min, double step, std::size_t i);

/// Solves the criterion pop - k + eps * (k + gdp) = 0 for one parameter given
/// the other three. Returns nothing when no finite boundary exists: a floored
/// zero denominator, or eps >= 1 with pop + eps * gdp positive, where the
/// index is positive for every k.
std::optional<double> boundary_solve(Param unknown, const ParamSet& known,
                                     double floor = kDefaultDenominatorFloor);

PhaseGrid classify_grid(const RegionSpec& spec, double tol = kDefaultClassifyTol,
                        std::size_t cell_budget = kDefaultCellBudget);

struct BoundaryPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Boundary curve for a region spec: for every x lattice value, the y-axis
/// parameter value that zeroes the index, where one exists. Ascending x,
/// unclamped (points may fall outside the y axis range).
std::vector<BoundaryPoint> boundary_polyline(const RegionSpec& spec,
                                             double floor = kDefaultDenominatorFloor);

std::vector<std::string> preset_names();

/// Named region presets: fig2 scans (gdp_growth, pop_growth) at k=0.05,
/// eps=0.5; fig3 scans (k, gdp_growth) at pop=0.01, eps=0.5; fig4 scans
/// (k, epsilon) at pop=0.01, gdp=0.03; fig5a and fig5c scan (k, epsilon) at
/// pop=0.02, gdp=0.05; fig5b at pop=0.01, gdp=0.03.
RegionSpec preset(const std::string& name);

struct RatePoint {
    double year = 0.0;
    double rate = 0.0;
};

/// Pointwise pop_rate + epsilon * gdp_rate over the years both rate series
/// share. Inputs must be of kind rate; years outside the intersection drop.
std::vector<RatePoint> combined_growth_series(const TimeSeries& pop_growth_series,
                                              const TimeSeries& gdp_growth_series,
                                              double epsilon);

}  // namespace demat
