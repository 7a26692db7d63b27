#include "demat/cases.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "demat/errors.hpp"
#include "demat/table_io.hpp"

namespace demat {

const char* to_string(Category c) noexcept {
    switch (c) {
        case Category::chemicals: return "chemicals";
        case Category::hardware: return "hardware";
        case Category::energy: return "energy";
    }
    return "unknown";
}

Category category_from_string(const std::string& name) {
    if (name == "chemicals") return Category::chemicals;
    if (name == "hardware") return Category::hardware;
    if (name == "energy") return Category::energy;
    throw InvalidArgumentError("unknown category '" + name +
                               "' (expected chemicals, hardware or energy)");
}

namespace {

int find_column(const io::Table& table, const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

int require_column(const io::Table& table, const std::string& name) {
    const int idx = find_column(table, name);
    if (idx < 0) {
        throw ParseError(table.path, table.header_line, "missing column '" + name + "'");
    }
    return idx;
}

const std::string& field(const io::Table& table, std::size_t row, int col) {
    const auto& cells = table.rows[row];
    if (static_cast<std::size_t>(col) >= cells.size()) {
        throw ParseError(table.path, table.row_lines[row],
                         "expected at least " + std::to_string(col + 1) + " fields, got " +
                         std::to_string(cells.size()));
    }
    return cells[static_cast<std::size_t>(col)];
}

}  // namespace

std::vector<CaseRecord> load_cases(const std::string& path, std::vector<std::string>* warnings) {
    const io::Table table = io::read_delimited(path);

    const int col_name = require_column(table, "name");
    const int col_category = require_column(table, "category");
    const int col_g = require_column(table, "g");
    const int col_k = require_column(table, "k");
    const int col_period = find_column(table, "period");
    int col_start = -1, col_end = -1;
    if (col_period < 0) {
        col_start = require_column(table, "start_year");
        col_end = require_column(table, "end_year");
    }
    const int col_eps_expected = find_column(table, "epsilon_expected");
    const int col_index_expected = find_column(table, "index_expected");

    std::vector<CaseRecord> records;
    records.reserve(table.rows.size());
    std::unordered_set<std::string> seen;
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
        const int line = table.row_lines[row];
        CaseRecord record;
        record.name = field(table, row, col_name);
        if (record.name.empty()) {
            throw ParseError(path, line, "empty case name");
        }
        try {
            record.category = category_from_string(field(table, row, col_category));
        } catch (const InvalidArgumentError& e) {
            throw ParseError(path, line, e.what());
        }
        if (col_period >= 0) {
            const std::string& period = field(table, row, col_period);
            const auto dash = period.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 >= period.size()) {
                throw ParseError(path, line, "malformed period '" + period +
                                 "' (expected start-end)");
            }
            record.start_year =
                static_cast<int>(io::parse_integer(period.substr(0, dash), path, line));
            record.end_year =
                static_cast<int>(io::parse_integer(period.substr(dash + 1), path, line));
        } else {
            record.start_year =
                static_cast<int>(io::parse_integer(field(table, row, col_start), path, line));
            record.end_year =
                static_cast<int>(io::parse_integer(field(table, row, col_end), path, line));
        }
        if (record.start_year >= record.end_year) {
            throw ParseError(path, line, "malformed period: start year " +
                             std::to_string(record.start_year) + " is not before end year " +
                             std::to_string(record.end_year));
        }
        record.g = io::parse_number(field(table, row, col_g), table.delimiter, path, line);
        record.k = io::parse_number(field(table, row, col_k), table.delimiter, path, line);
        if (col_eps_expected >= 0) {
            record.epsilon_expected =
                io::parse_number(field(table, row, col_eps_expected), table.delimiter, path, line);
        }
        if (col_index_expected >= 0) {
            record.index_expected = io::parse_number(field(table, row, col_index_expected),
                                                     table.delimiter, path, line);
        }
        if (!seen.insert(record.name).second && warnings) {
            warnings->push_back("duplicate case name '" + record.name + "' at " + path + ":" +
                                std::to_string(line) + "; both rows kept");
        }
        records.push_back(std::move(record));
    }
    return records;
}

EraContext era_for(const CaseRecord& record, int split_end_year) {
    return {kEraPopGrowth,
            record.end_year <= split_end_year ? kEarlyEraGdpGrowth : kModernEraGdpGrowth};
}

CaseAssessment assess_case(const CaseRecord& record, const EraContext& era, double classify_tol) {
    CaseAssessment assessment;
    assessment.record = record;
    assessment.era = era;
    assessment.epsilon = elasticity_from_rates(record.g, record.k, era.gdp_growth);
    assessment.index = materialization_index(era, record.k, assessment.epsilon);
    assessment.classification = classify_index(assessment.index, classify_tol);
    return assessment;
}

std::vector<ExpectedRow> expected_rows(const std::vector<CaseRecord>& records) {
    std::vector<ExpectedRow> expected;
    expected.reserve(records.size());
    for (const auto& record : records) {
        if (!record.epsilon_expected || !record.index_expected) {
            throw ReportError("case '" + record.name +
                              "' carries no epsilon_expected/index_expected columns");
        }
        expected.push_back({record.name, *record.epsilon_expected, *record.index_expected});
    }
    return expected;
}

ReplicationReport replicate_tables(const std::vector<CaseRecord>& records,
                                   const std::vector<ExpectedRow>& expected,
                                   const ReplicationTolerances& tolerances,
                                   int era_split_end_year) {
    std::unordered_map<std::string, const ExpectedRow*> by_name;
    for (const auto& row : expected) {
        by_name.emplace(row.name, &row);
    }

    std::vector<std::string> unmatched_records;
    std::unordered_set<std::string> used;
    for (const auto& record : records) {
        if (by_name.find(record.name) == by_name.end()) {
            unmatched_records.push_back(record.name);
        } else {
            used.insert(record.name);
        }
    }
    std::vector<std::string> unmatched_expected;
    for (const auto& row : expected) {
        if (used.find(row.name) == used.end()) {
            unmatched_expected.push_back(row.name);
        }
    }
    if (!unmatched_records.empty() || !unmatched_expected.empty()) {
        std::string msg = "replication inputs do not line up;";
        if (!unmatched_records.empty()) {
            msg += " cases without reference values:";
            for (const auto& name : unmatched_records) msg += " " + name;
            msg += ";";
        }
        if (!unmatched_expected.empty()) {
            msg += " reference rows without cases:";
            for (const auto& name : unmatched_expected) msg += " " + name;
        }
        throw ReportError(msg);
    }

    // Tolerances describe decimal magnitudes; reference values rounded to the
    // last printed digit can deviate by exactly the tolerance, which binary
    // doubles render a hair above it. The ppb headroom absorbs only that.
    const auto within_tol = [](double deviation, double tol) {
        return deviation <= tol * (1.0 + 1e-9);
    };

    ReplicationReport report;
    report.rows.reserve(records.size());
    for (const auto& record : records) {
        const auto assessment = assess_case(record, era_for(record, era_split_end_year));
        const ExpectedRow& ref = *by_name.at(record.name);
        RowDeviation row;
        row.name = record.name;
        row.epsilon = assessment.epsilon;
        row.epsilon_expected = ref.epsilon;
        row.epsilon_deviation = std::fabs(assessment.epsilon - ref.epsilon);
        row.index = assessment.index;
        row.index_expected = ref.index;
        row.index_deviation = std::fabs(assessment.index - ref.index);
        row.classification = assessment.classification;
        row.within = within_tol(row.epsilon_deviation, tolerances.epsilon_tol) &&
                     within_tol(row.index_deviation, tolerances.index_tol);
        switch (row.classification) {
            case Classification::Dematerializing: ++report.n_dematerializing; break;
            case Classification::Boundary: ++report.n_boundary; break;
            case Classification::Materializing: ++report.n_materializing; break;
        }
        report.max_epsilon_deviation = std::max(report.max_epsilon_deviation, row.epsilon_deviation);
        report.max_index_deviation = std::max(report.max_index_deviation, row.index_deviation);
        report.rows.push_back(std::move(row));
    }
    report.pass = report.n_dematerializing == 0 && report.n_boundary == 0 &&
                  std::all_of(report.rows.begin(), report.rows.end(),
                              [](const RowDeviation& row) { return row.within; });
    return report;
}

std::string render_replication_report(const ReplicationReport& report) {
    std::string out =
        "name,epsilon,epsilon_expected,epsilon_deviation,"
        "index,index_expected,index_deviation,class,within\n";
    for (const auto& row : report.rows) {
        out += row.name + ',' + io::format_double(row.epsilon) + ',' +
               io::format_double(row.epsilon_expected) + ',' +
               io::format_double(row.epsilon_deviation) + ',' + io::format_double(row.index) +
               ',' + io::format_double(row.index_expected) + ',' +
               io::format_double(row.index_deviation) + ',' + to_string(row.classification) +
               ',' + (row.within ? "true" : "false") + '\n';
    }
    out += "# cases=" + std::to_string(report.rows.size()) +
           " materializing=" + std::to_string(report.n_materializing) +
           " boundary=" + std::to_string(report.n_boundary) +
           " dematerializing=" + std::to_string(report.n_dematerializing) +
           " max_epsilon_deviation=" + io::format_double(report.max_epsilon_deviation) +
           " max_index_deviation=" + io::format_double(report.max_index_deviation) + '\n';
    out += report.pass ? "PASS\n" : "FAIL\n";
    return out;
}

DeclineVerdict detect_absolute_decline(const TimeSeries& series) {
    const ExponentialFit fit = fit_exponential(series);
    DeclineVerdict verdict;
    verdict.label = series.label;
    verdict.fitted_rate = fit.rate;
    verdict.endpoint_ratio =
        series.observations.back().value / series.observations.front().value;
    verdict.declining = verdict.fitted_rate < 0.0 && verdict.endpoint_ratio < 1.0;
    return verdict;
}

}  // namespace demat
