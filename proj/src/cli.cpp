#include "demat/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demat/cases.hpp"
#include "demat/errors.hpp"
#include "demat/estimate.hpp"
#include "demat/model.hpp"
#include "demat/phase.hpp"
#include "demat/svg.hpp"
#include "demat/table_io.hpp"

namespace fs = std::filesystem;

namespace demat::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitOptions {
    std::string input;
    std::string kind = "consumption";
    std::string label;
    std::string out;
};

struct AssessOptions {
    std::string cases;
    std::string out;
    std::optional<double> pop;
    std::optional<double> gdp;
};

struct PhaseOptions {
    std::string preset_name;
    std::string x_spec;
    std::string y_spec;
    std::vector<std::string> fixes;
    std::optional<double> pop;
    std::optional<double> gdp;
    std::string cases;
    std::string out;
    std::string format = "both";
    std::string pop_series;
    std::string gdp_series;
    double epsilon = 0.5;
};

struct ReplicateOptions {
    std::string cases;
    std::string out;
    double tol_epsilon = 1e-4;
    double tol_index = 1e-6;
};

struct DeclineOptions {
    std::vector<std::string> inputs;
    std::string out;
};

struct ReportOptions {
    std::string cases;
    std::string out;
    std::string format = "both";
};

std::string default_cases_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    return (fs::path(default_data_dir()) / "nagy57.csv").string();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        io::write_text_atomic(out_path, content);
    }
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
}

double parse_flag_number(const std::string& text, const std::string& flag) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (text.empty() || result.ec != std::errc() || result.ptr != end) {
        throw UsageError("cannot parse number '" + text + "' in " + flag);
    }
    return value;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

Param parse_flag_param(const std::string& text, const std::string& flag) {
    try {
        return param_from_string(text);
    } catch (const InvalidArgumentError& e) {
        throw UsageError(std::string(e.what()) + " in " + flag);
    }
}

AxisSpec parse_axis(const std::string& text, const std::string& flag) {
    const auto parts = split_on(text, ':');
    if (parts.size() != 4) {
        throw UsageError("expected VAR:MIN:MAX:STEP in " + flag + ", got '" + text + "'");
    }
    AxisSpec axis;
    axis.param = parse_flag_param(parts[0], flag);
    axis.min = parse_flag_number(parts[1], flag);
    axis.max = parse_flag_number(parts[2], flag);
    axis.step = parse_flag_number(parts[3], flag);
    return axis;
}

std::string render_assessments(const std::vector<CaseAssessment>& assessments) {
    std::string out =
        "name,category,start_year,end_year,g,k,pop_growth,gdp_growth,epsilon,index,class\n";
    for (const auto& a : assessments) {
        out += a.record.name + ',' + to_string(a.record.category) + ',' +
               std::to_string(a.record.start_year) + ',' + std::to_string(a.record.end_year) +
               ',' + io::format_double(a.record.g) + ',' + io::format_double(a.record.k) + ',' +
               io::format_double(a.era.pop_growth) + ',' + io::format_double(a.era.gdp_growth) +
               ',' + io::format_double(a.epsilon) + ',' + io::format_double(a.index) + ',' +
               to_string(a.classification) + '\n';
    }
    return out;
}

std::string render_grid_csv(const PhaseGrid& grid) {
    std::string out = "x,y,index,class\n";
    for (const auto& cell : grid.cells) {
        out += io::format_double(cell.x) + ',' + io::format_double(cell.y) + ',' +
               io::format_double(cell.index) + ',' + to_string(cell.classification) + '\n';
    }
    return out;
}

std::string render_boundary_csv(const std::vector<BoundaryPoint>& boundary) {
    std::string out = "x,y\n";
    for (const auto& p : boundary) {
        out += io::format_double(p.x) + ',' + io::format_double(p.y) + '\n';
    }
    return out;
}

std::optional<Category> preset_category_filter(const std::string& preset_name) {
    if (preset_name == "fig5a") return Category::chemicals;
    if (preset_name == "fig5b") return Category::hardware;
    if (preset_name == "fig5c") return Category::energy;
    return std::nullopt;
}

std::vector<svg::PointMarker> case_markers(const std::vector<CaseRecord>& records,
                                           const RegionSpec& spec,
                                           std::optional<Category> filter) {
    const bool axes_are_k_eps =
        (spec.x_axis.param == Param::k && spec.y_axis.param == Param::epsilon) ||
        (spec.x_axis.param == Param::epsilon && spec.y_axis.param == Param::k);
    if (!axes_are_k_eps) {
        std::cerr << "warning: case markers need k and epsilon axes; skipping overlay\n";
        return {};
    }
    std::vector<svg::PointMarker> markers;
    for (const auto& record : records) {
        if (filter && record.category != *filter) continue;
        double eps;
        try {
            eps = elasticity_from_rates(record.g, record.k, spec.fixed.gdp_growth);
        } catch (const SingularDenominatorError&) {
            std::cerr << "warning: skipping case '" << record.name
                      << "': elasticity denominator too close to zero\n";
            continue;
        }
        const double x = spec.x_axis.param == Param::k ? record.k : eps;
        const double y = spec.y_axis.param == Param::k ? record.k : eps;
        markers.push_back({x, y});
    }
    return markers;
}

int run_fit(const FitOptions& opts) {
    const TimeSeries series =
        io::load_time_series(opts.input, series_kind_from_string(opts.kind), opts.label);
    const ExponentialFit fit = fit_exponential(series);
    std::string text = "label,kind,n_points,rate,ln_intercept,r_squared\n";
    text += series.label + ',' + to_string(series.kind) + ',' + std::to_string(fit.n_points) +
            ',' + io::format_double(fit.rate) + ',' + io::format_double(fit.ln_intercept) + ',' +
            io::format_double(fit.r_squared) + '\n';
    emit(opts.out, text);
    return 0;
}

int run_assess(const AssessOptions& opts) {
    std::vector<std::string> warnings;
    const auto records = load_cases(default_cases_path(opts.cases), &warnings);
    print_warnings(warnings);
    std::vector<CaseAssessment> assessments;
    assessments.reserve(records.size());
    for (const auto& record : records) {
        EraContext era = era_for(record);
        if (opts.pop) era.pop_growth = *opts.pop;
        if (opts.gdp) era.gdp_growth = *opts.gdp;
        assessments.push_back(assess_case(record, era));
    }
    emit(opts.out, render_assessments(assessments));
    return 0;
}

void write_region_outputs(const fs::path& dir, const std::string& stem, const PhaseGrid& grid,
                          const std::vector<BoundaryPoint>& boundary,
                          const std::vector<svg::PointMarker>& markers,
                          const std::string& title, const std::string& format) {
    if (format == "csv" || format == "both") {
        io::write_text_atomic(dir / (stem + "_grid.csv"), render_grid_csv(grid));
        io::write_text_atomic(dir / (stem + "_boundary.csv"), render_boundary_csv(boundary));
    }
    if (format == "svg" || format == "both") {
        io::write_text_atomic(dir / (stem + ".svg"),
                              svg::render_phase_chart(grid, boundary, markers, title));
    }
}

int run_phase(const PhaseOptions& opts) {
    const bool combined_mode = !opts.pop_series.empty() || !opts.gdp_series.empty();
    if (combined_mode) {
        if (opts.pop_series.empty() || opts.gdp_series.empty()) {
            throw UsageError("--pop-series and --gdp-series must be given together");
        }
        if (!opts.preset_name.empty() || !opts.x_spec.empty() || !opts.y_spec.empty()) {
            throw UsageError("rate-series mode does not take --preset, --x or --y");
        }
        const auto pop = io::load_time_series(opts.pop_series, SeriesKind::rate);
        const auto gdp = io::load_time_series(opts.gdp_series, SeriesKind::rate);
        const auto combined = combined_growth_series(pop, gdp, opts.epsilon);
        const fs::path dir(opts.out);
        if (opts.format == "csv" || opts.format == "both") {
            std::string text = "year,rate\n";
            for (const auto& p : combined) {
                text += io::format_double(p.year) + ',' + io::format_double(p.rate) + '\n';
            }
            io::write_text_atomic(dir / "combined.csv", text);
        }
        if (opts.format == "svg" || opts.format == "both") {
            const std::string title =
                "combined growth rate (epsilon=" + io::format_double(opts.epsilon) + ")";
            io::write_text_atomic(dir / "combined.svg",
                                  svg::render_rate_chart(combined, title, "rate"));
        }
        return 0;
    }

    RegionSpec spec;
    if (!opts.preset_name.empty()) {
        if (!opts.x_spec.empty() || !opts.y_spec.empty()) {
            throw UsageError("--preset cannot be combined with --x/--y");
        }
        spec = preset(opts.preset_name);
    } else {
        if (opts.x_spec.empty() || opts.y_spec.empty()) {
            throw UsageError("give either --preset or both --x and --y");
        }
        spec.x_axis = parse_axis(opts.x_spec, "--x");
        spec.y_axis = parse_axis(opts.y_spec, "--y");
    }
    for (const auto& fix : opts.fixes) {
        const auto eq = fix.find('=');
        if (eq == std::string::npos) {
            throw UsageError("expected VAR=VALUE in --fix, got '" + fix + "'");
        }
        spec.fixed.set(parse_flag_param(fix.substr(0, eq), "--fix"),
                       parse_flag_number(fix.substr(eq + 1), "--fix"));
    }
    if (opts.pop) spec.fixed.pop_growth = *opts.pop;
    if (opts.gdp) spec.fixed.gdp_growth = *opts.gdp;
    try {
        spec.validate();
    } catch (const InvalidArgumentError& e) {
        throw UsageError(e.what());
    }

    const PhaseGrid grid = classify_grid(spec);
    const auto boundary = boundary_polyline(spec);
    std::vector<svg::PointMarker> markers;
    if (!opts.cases.empty()) {
        std::vector<std::string> warnings;
        const auto records = load_cases(opts.cases, &warnings);
        print_warnings(warnings);
        markers = case_markers(records, spec, preset_category_filter(spec.name));
    }
    const std::string title = spec.name.empty() ? "phase region" : spec.name;
    const fs::path dir(opts.out);
    if (opts.format == "csv" || opts.format == "both") {
        io::write_text_atomic(dir / "grid.csv", render_grid_csv(grid));
        io::write_text_atomic(dir / "boundary.csv", render_boundary_csv(boundary));
    }
    if (opts.format == "svg" || opts.format == "both") {
        io::write_text_atomic(dir / "phase.svg",
                              svg::render_phase_chart(grid, boundary, markers, title));
    }
    return 0;
}

int run_replicate(const ReplicateOptions& opts) {
    std::vector<std::string> warnings;
    const auto records = load_cases(default_cases_path(opts.cases), &warnings);
    print_warnings(warnings);
    const auto expected = expected_rows(records);
    const auto report =
        replicate_tables(records, expected, {opts.tol_epsilon, opts.tol_index});
    const std::string text = render_replication_report(report);
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        io::write_text_atomic(opts.out, text);
        std::cout << (report.pass ? "PASS\n" : "FAIL\n");
    }
    return report.pass ? 0 : 3;
}

int run_decline(const DeclineOptions& opts) {
    std::string text = "label,n_points,fitted_rate,endpoint_ratio,declining\n";
    for (const auto& input : opts.inputs) {
        const TimeSeries series = io::load_time_series(input, SeriesKind::consumption);
        if (series.observations.size() < 5) {
            std::cerr << "warning: series '" << series.label << "' has only "
                      << series.observations.size() << " points; the verdict is fragile\n";
        }
        const DeclineVerdict verdict = detect_absolute_decline(series);
        text += verdict.label + ',' + std::to_string(series.observations.size()) + ',' +
                io::format_double(verdict.fitted_rate) + ',' +
                io::format_double(verdict.endpoint_ratio) + ',' +
                (verdict.declining ? "true" : "false") + '\n';
    }
    emit(opts.out, text);
    return 0;
}

int run_report(const ReportOptions& opts) {
    std::vector<std::string> warnings;
    const auto records = load_cases(default_cases_path(opts.cases), &warnings);
    print_warnings(warnings);

    std::vector<CaseAssessment> assessments;
    assessments.reserve(records.size());
    std::size_t n_chem = 0, n_hard = 0, n_energy = 0;
    std::size_t n_demat = 0, n_boundary = 0, n_mat = 0;
    double min_index = 0.0, max_index = 0.0;
    for (const auto& record : records) {
        const auto a = assess_case(record, era_for(record));
        switch (record.category) {
            case Category::chemicals: ++n_chem; break;
            case Category::hardware: ++n_hard; break;
            case Category::energy: ++n_energy; break;
        }
        switch (a.classification) {
            case Classification::Dematerializing: ++n_demat; break;
            case Classification::Boundary: ++n_boundary; break;
            case Classification::Materializing: ++n_mat; break;
        }
        if (assessments.empty()) {
            min_index = max_index = a.index;
        } else {
            min_index = std::min(min_index, a.index);
            max_index = std::max(max_index, a.index);
        }
        assessments.push_back(a);
    }

    const fs::path dir(opts.out);
    io::write_text_atomic(dir / "assessments.csv", render_assessments(assessments));

    const std::pair<const char*, Category> figures[] = {
        {"fig5a", Category::chemicals},
        {"fig5b", Category::hardware},
        {"fig5c", Category::energy},
    };
    for (const auto& [name, category] : figures) {
        const RegionSpec spec = preset(name);
        const PhaseGrid grid = classify_grid(spec);
        const auto boundary = boundary_polyline(spec);
        const auto markers = case_markers(records, spec, category);
        write_region_outputs(dir, name, grid, boundary, markers, name, opts.format);
    }

    std::string summary;
    summary += "cases: " + std::to_string(records.size()) + '\n';
    summary += "chemicals: " + std::to_string(n_chem) + '\n';
    summary += "hardware: " + std::to_string(n_hard) + '\n';
    summary += "energy: " + std::to_string(n_energy) + '\n';
    summary += "dematerializing: " + std::to_string(n_demat) + '\n';
    summary += "boundary: " + std::to_string(n_boundary) + '\n';
    summary += "materializing: " + std::to_string(n_mat) + '\n';
    if (!assessments.empty()) {
        summary += "min_index: " + io::format_double(min_index) + '\n';
        summary += "max_index: " + io::format_double(max_index) + '\n';
    }
    io::write_text_atomic(dir / "summary.txt", summary);
    return 0;
}

}  // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("DEMAT_DATA_DIR")) {
        if (*env != '\0') return env;
    }
#ifdef DEMAT_DATA_DIR_DEFAULT
    return DEMAT_DATA_DIR_DEFAULT;
#else
    return "data";
#endif
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exponential trend fitting, demand elasticity estimation and absolute "
        "dematerialization analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "demat 1.0.0");

    FitOptions fit_opts;
    auto* fit_cmd = app.add_subcommand(
        "fit", "Fit an exponential trend to a year,value series by least squares on logs");
    fit_cmd->add_option("--input", fit_opts.input, "series file with header year,value")
        ->required();
    fit_cmd
        ->add_option("--kind", fit_opts.kind,
                     "series kind; for price series the improvement rate is the negated slope")
        ->check(CLI::IsMember(
            {"price", "demand", "gdp_per_capita", "population", "consumption"}))
        ->capture_default_str();
    fit_cmd->add_option("--label", fit_opts.label, "series label (default: file stem)");
    fit_cmd->add_option("--out", fit_opts.out, "output file (default: stdout)");

    AssessOptions assess_opts;
    auto* assess_cmd = app.add_subcommand(
        "assess", "Assess a case table: elasticity, materialization index, classification");
    assess_cmd->add_option("--cases", assess_opts.cases, "case table (default: bundled dataset)")
        ->envname("DEMAT_CASES");
    assess_cmd->add_option("--out", assess_opts.out, "output file (default: stdout)");
    assess_cmd->add_option("--pop", assess_opts.pop,
                           "override the era population growth rate for every case");
    assess_cmd->add_option("--gdp", assess_opts.gdp,
                           "override the era per-capita GDP growth rate for every case");

    PhaseOptions phase_opts;
    auto* phase_cmd = app.add_subcommand(
        "phase",
        "Classify a parameter region and write grid, boundary and SVG files, or combine two "
        "growth-rate series. Presets: fig2 (gdp_growth x pop_growth at k=0.05, eps=0.5), fig3 "
        "(k x gdp_growth at pop=0.01, eps=0.5), fig4 (k x epsilon at pop=0.01, gdp=0.03), "
        "fig5a and fig5c (k x epsilon at pop=0.02, gdp=0.05), fig5b (k x epsilon at pop=0.01, "
        "gdp=0.03)");
    phase_cmd->add_option("--preset", phase_opts.preset_name, "named region preset")
        ->check(CLI::IsMember(preset_names()));
    phase_cmd->add_option("--x", phase_opts.x_spec, "x axis as VAR:MIN:MAX:STEP");
    phase_cmd->add_option("--y", phase_opts.y_spec, "y axis as VAR:MIN:MAX:STEP");
    phase_cmd->add_option("--fix", phase_opts.fixes,
                          "fixed parameter as VAR=VALUE (repeatable)");
    phase_cmd->add_option("--pop", phase_opts.pop, "fixed population growth rate");
    phase_cmd->add_option("--gdp", phase_opts.gdp, "fixed per-capita GDP growth rate");
    phase_cmd->add_option("--cases", phase_opts.cases,
                          "case table whose (k, epsilon) points are drawn on the chart");
    phase_cmd->add_option("--out", phase_opts.out, "output directory")->required();
    phase_cmd->add_option("--format", phase_opts.format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->envname("DEMAT_FORMAT")
        ->capture_default_str();
    phase_cmd->add_option("--pop-series", phase_opts.pop_series,
                          "population growth-rate series (year,value) for combined mode");
    phase_cmd->add_option("--gdp-series", phase_opts.gdp_series,
                          "per-capita GDP growth-rate series for combined mode");
    phase_cmd
        ->add_option("--epsilon", phase_opts.epsilon,
                     "elasticity weighting the GDP series in combined mode")
        ->capture_default_str();

    ReplicateOptions replicate_opts;
    auto* replicate_cmd = app.add_subcommand(
        "replicate",
        "Recompute a case table against its reference columns; exit 0 only on PASS");
    replicate_cmd
        ->add_option("--cases", replicate_opts.cases,
                     "case table with epsilon_expected,index_expected columns "
                     "(default: bundled dataset)")
        ->envname("DEMAT_CASES");
    replicate_cmd->add_option("--out", replicate_opts.out, "report file (default: stdout)");
    replicate_cmd
        ->add_option("--tol-epsilon", replicate_opts.tol_epsilon,
                     "absolute tolerance for elasticity deviations")
        ->envname("DEMAT_TOL_EPSILON")
        ->capture_default_str();
    replicate_cmd
        ->add_option("--tol-index", replicate_opts.tol_index,
                     "absolute tolerance for index deviations")
        ->envname("DEMAT_TOL_INDEX")
        ->capture_default_str();

    DeclineOptions decline_opts;
    auto* decline_cmd = app.add_subcommand(
        "decline", "Test consumption series for absolute decline (negative fitted trend and a "
                   "last value below the first)");
    decline_cmd->add_option("--input", decline_opts.inputs, "series file (repeatable)")
        ->required();
    decline_cmd->add_option("--out", decline_opts.out, "output file (default: stdout)");

    ReportOptions report_opts;
    auto* report_cmd = app.add_subcommand(
        "report", "Write assessments, region charts with case markers and a summary");
    report_cmd->add_option("--cases", report_opts.cases, "case table (default: bundled dataset)")
        ->envname("DEMAT_CASES");
    report_cmd->add_option("--out", report_opts.out, "output directory")->required();
    report_cmd->add_option("--format", report_opts.format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->envname("DEMAT_FORMAT")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(fit_opts);
        if (assess_cmd->parsed()) return run_assess(assess_opts);
        if (phase_cmd->parsed()) return run_phase(phase_opts);
        if (replicate_cmd->parsed()) return run_replicate(replicate_opts);
        if (decline_cmd->parsed()) return run_decline(decline_opts);
        if (report_cmd->parsed()) return run_report(report_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace demat::cli
