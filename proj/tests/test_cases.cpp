#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "demat/cases.hpp"
#include "demat/errors.hpp"
#include "decline_fixtures.hpp"
#include "test_support.hpp"

using namespace demat;

namespace {

std::string bundled_cases() {
    return (std::filesystem::path(testsupport::data_dir()) / "nagy57.csv").string();
}

const CaseRecord& find_case(const std::vector<CaseRecord>& records, const std::string& name) {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const CaseRecord& r) { return r.name == name; });
    REQUIRE(it != records.end());
    return *it;
}

std::size_t count_category(const std::vector<CaseRecord>& records, Category c) {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(),
        [&](const CaseRecord& r) { return r.category == c; }));
}

}  // namespace

TEST_CASE("bundled table loads 57 records with the documented split") {
    const auto records = load_cases(bundled_cases());
    CHECK(records.size() == 57);
    CHECK(count_category(records, Category::chemicals) == 40);
    CHECK(count_category(records, Category::hardware) == 4);
    CHECK(count_category(records, Category::energy) == 13);

    const auto& first = records.front();
    CHECK(first.name == "AcrylicFiber");
    CHECK(first.category == Category::chemicals);
    CHECK(first.start_year == 1960);
    CHECK(first.end_year == 1972);
    CHECK(first.g == doctest::Approx(0.176744).epsilon(1e-12));
    CHECK(first.k == doctest::Approx(0.104651).epsilon(1e-12));
    REQUIRE(first.epsilon_expected.has_value());
    REQUIRE(first.index_expected.has_value());
    CHECK(*first.epsilon_expected == doctest::Approx(1.142857).epsilon(1e-12));
    CHECK(*first.index_expected == doctest::Approx(0.092093).epsilon(1e-12));
}

TEST_CASE("semicolon table with comma decimals loads identically") {
    const auto a = load_cases(bundled_cases());
    const auto b = load_cases(
        (std::filesystem::path(testsupport::data_dir()) / "nagy57_comma_decimal.csv").string());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].category == b[i].category);
        CHECK(a[i].start_year == b[i].start_year);
        CHECK(a[i].end_year == b[i].end_year);
        CHECK(a[i].g == b[i].g);
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].epsilon_expected == b[i].epsilon_expected);
        CHECK(a[i].index_expected == b[i].index_expected);
    }
}

TEST_CASE("period column is accepted in place of explicit year columns") {
    const auto dir = testsupport::fresh_temp_dir("cases_period");
    const auto path = dir / "cases.csv";
    testsupport::write_file(path,
                            "name,category,period,g,k\n"
                            "Widget,chemicals,1960-1972,0.18,0.10\n");
    const auto records = load_cases(path.string());
    REQUIRE(records.size() == 1);
    CHECK(records[0].start_year == 1960);
    CHECK(records[0].end_year == 1972);
    CHECK_FALSE(records[0].epsilon_expected.has_value());
    CHECK_FALSE(records[0].index_expected.has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("load_cases reports precise parse failures") {
    const auto dir = testsupport::fresh_temp_dir("cases_bad");

    SUBCASE("missing required column points at the header") {
        const auto path = dir / "missing.csv";
        testsupport::write_file(path,
                                "name,category,start_year,end_year,g\n"
                                "Widget,chemicals,1960,1972,0.18\n");
        try {
            load_cases(path.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(std::string(e.what()).find("k") != std::string::npos);
        }
    }

    SUBCASE("unknown category names its line") {
        const auto path = dir / "badcat.csv";
        testsupport::write_file(path,
                                "name,category,start_year,end_year,g,k\n"
                                "Widget,chemicals,1960,1972,0.18,0.10\n"
                                "Gadget,plastics,1960,1972,0.18,0.10\n");
        try {
            load_cases(path.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("plastics") != std::string::npos);
        }
    }

    SUBCASE("malformed period") {
        const auto path = dir / "badperiod.csv";
        testsupport::write_file(path,
                                "name,category,period,g,k\n"
                                "Widget,chemicals,1960:1972,0.18,0.10\n");
        CHECK_THROWS_AS(load_cases(path.string()), ParseError);
    }

    SUBCASE("period must move forward") {
        const auto path = dir / "backwards.csv";
        testsupport::write_file(path,
                                "name,category,start_year,end_year,g,k\n"
                                "Widget,chemicals,1972,1960,0.18,0.10\n");
        CHECK_THROWS_AS(load_cases(path.string()), ParseError);
    }

    SUBCASE("non-numeric rate") {
        const auto path = dir / "badnum.csv";
        testsupport::write_file(path,
                                "name,category,start_year,end_year,g,k\n"
                                "Widget,chemicals,1960,1972,fast,0.10\n");
        try {
            load_cases(path.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }

    std::filesystem::remove_all(dir);
}

TEST_CASE("duplicate names load with a warning") {
    const auto dir = testsupport::fresh_temp_dir("cases_dup");
    const auto path = dir / "dup.csv";
    testsupport::write_file(path,
                            "name,category,start_year,end_year,g,k\n"
                            "Widget,chemicals,1960,1972,0.18,0.10\n"
                            "Widget,chemicals,1950,1962,0.20,0.12\n");
    std::vector<std::string> warnings;
    const auto records = load_cases(path.string(), &warnings);
    CHECK(records.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("Widget") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("era assignment follows the period end year") {
    const auto records = load_cases(bundled_cases());

    const auto early = era_for(find_case(records, "AcrylicFiber"));
    CHECK(early.pop_growth == kEraPopGrowth);
    CHECK(early.gdp_growth == kEarlyEraGdpGrowth);

    const auto modern = era_for(find_case(records, "DRAM"));
    CHECK(modern.pop_growth == kEraPopGrowth);
    CHECK(modern.gdp_growth == kModernEraGdpGrowth);

    const auto oil = era_for(find_case(records, "CrudeOil"));
    CHECK(oil.gdp_growth == kEarlyEraGdpGrowth);

    SUBCASE("the split year is configurable") {
        CaseRecord r;
        r.name = "Synthetic";
        r.start_year = 1970;
        r.end_year = 1980;
        CHECK(era_for(r).gdp_growth == kModernEraGdpGrowth);
        CHECK(era_for(r, 1985).gdp_growth == kEarlyEraGdpGrowth);
    }
}

TEST_CASE("assess_case reproduces the reference rows") {
    const auto records = load_cases(bundled_cases());

    SUBCASE("AcrylicFiber") {
        const auto& r = find_case(records, "AcrylicFiber");
        const auto a = assess_case(r, era_for(r));
        CHECK(a.epsilon == doctest::Approx(1.142857142857143).epsilon(1e-13));
        CHECK(std::abs(a.index - 0.092093) < 1e-6);
        CHECK(a.classification == Classification::Materializing);
    }

    SUBCASE("Ammonia") {
        const auto& r = find_case(records, "Ammonia");
        const auto a = assess_case(r, era_for(r));
        CHECK(a.epsilon == doctest::Approx(0.7768553924007449).epsilon(1e-13));
        CHECK(std::abs(a.epsilon - *r.epsilon_expected) < 1e-4);
        // The reference index is quoted to six decimals, so the deviation can
        // land exactly on the tolerance; allow the same hair of slack the
        // replication check does.
        CHECK(std::abs(a.index - *r.index_expected) <= 1e-6 * (1 + 1e-9));
    }

    SUBCASE("WindTurbine2 carries the largest elasticity") {
        const auto& r = find_case(records, "WindTurbine2");
        const auto a = assess_case(r, era_for(r));
        CHECK(std::abs(a.epsilon - 7.692308) < 1e-4);
        CHECK(std::abs(a.index - 0.515349) < 1e-6);
    }

    SUBCASE("HardDiskDrive demand kept exact pace with improvement") {
        const auto& r = find_case(records, "HardDiskDrive");
        CHECK(r.g == r.k);
        const auto a = assess_case(r, era_for(r));
        CHECK(std::abs(a.index - 0.02) < 1e-12);
    }

    SUBCASE("the growth identity holds for every record") {
        for (const auto& r : records) {
            const auto era = era_for(r);
            const auto a = assess_case(r, era);
            CHECK(std::abs(a.index - (era.pop_growth + r.g - r.k)) < 1e-12);
        }
    }

    SUBCASE("reference elasticities close the era back-substitution") {
        for (const auto& r : records) {
            REQUIRE(r.epsilon_expected.has_value());
            const auto era = era_for(r);
            CHECK(std::abs(r.g / *r.epsilon_expected - r.k - era.gdp_growth) < 5e-4);
        }
    }
}

TEST_CASE("every bundled case sits above the break-even line in its chart") {
    const auto records = load_cases(bundled_cases());
    for (const auto& r : records) {
        const double pop = (r.category == Category::hardware) ? 0.01 : kEraPopGrowth;
        CHECK(pop + r.g - r.k > 0.0);
    }
}

TEST_CASE("replication of the bundled table passes") {
    const auto records = load_cases(bundled_cases());
    const auto expected = expected_rows(records);
    const auto report = replicate_tables(records, expected);

    CHECK(report.rows.size() == 57);
    CHECK(report.n_materializing == 57);
    CHECK(report.n_boundary == 0);
    CHECK(report.n_dematerializing == 0);
    CHECK(report.max_epsilon_deviation < 1e-4);
    CHECK(report.max_index_deviation <= 1e-6 * (1 + 1e-9));
    CHECK(report.pass);

    for (const auto& row : report.rows) CHECK(row.within);
}

TEST_CASE("replication fails when a rate is perturbed") {
    auto records = load_cases(bundled_cases());
    const auto expected = expected_rows(records);
    records[0].g += 0.01;
    const auto report = replicate_tables(records, expected);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.rows[0].within);
    CHECK(report.max_epsilon_deviation > 1e-4);
}

TEST_CASE("replication requires matching row names") {
    auto records = load_cases(bundled_cases());
    const auto expected = expected_rows(records);
    records[3].name = "Renamed";
    try {
        replicate_tables(records, expected);
        FAIL("expected ReportError");
    } catch (const ReportError& e) {
        CHECK(std::string(e.what()).find("Renamed") != std::string::npos);
    }
}

TEST_CASE("expected_rows requires the reference columns") {
    std::vector<CaseRecord> records(1);
    records[0].name = "Widget";
    records[0].start_year = 1960;
    records[0].end_year = 1972;
    records[0].g = 0.18;
    records[0].k = 0.10;
    CHECK_THROWS_AS(expected_rows(records), ReportError);
}

TEST_CASE("rendered report is delimited rows plus a verdict line") {
    const auto records = load_cases(bundled_cases());
    const auto report = replicate_tables(records, expected_rows(records));
    const auto text = render_replication_report(report);

    CHECK(text.find("name,epsilon,epsilon_expected") == 0);
    CHECK(text.find("AcrylicFiber,") != std::string::npos);
    CHECK(text.find("cases=57") != std::string::npos);
    CHECK(text.find("materializing=57") != std::string::npos);

    const auto last_newline = text.find_last_not_of('\n');
    REQUIRE(last_newline != std::string::npos);
    const auto line_start = text.rfind('\n', last_newline);
    const auto last_line = text.substr(line_start + 1, last_newline - line_start);
    CHECK(last_line == "PASS");
}

TEST_CASE("absolute-decline detector separates the curated suite") {
    for (const auto& entry : fixtures::decline_suite()) {
        const auto verdict = detect_absolute_decline(entry.series);
        INFO("series: ", entry.series.label);
        CHECK(verdict.declining == entry.declining);
        CHECK(verdict.label == entry.series.label);
    }
}

TEST_CASE("decline verdict reports both signals") {
    const auto suite = fixtures::decline_suite();
    const auto by_label = [&](const std::string& label) -> const fixtures::LabeledSeries& {
        const auto it = std::find_if(suite.begin(), suite.end(), [&](const auto& e) {
            return e.series.label == label;
        });
        REQUIRE(it != suite.end());
        return *it;
    };

    const auto v = detect_absolute_decline(by_label("exp_growth").series);
    CHECK(v.fitted_rate > 0.0);
    CHECK(v.endpoint_ratio > 1.0);
    CHECK_FALSE(v.declining);

    const auto w = detect_absolute_decline(by_label("exp_decline_2pct").series);
    CHECK(w.fitted_rate == doctest::Approx(-0.02).epsilon(1e-9));
    CHECK(w.endpoint_ratio < 1.0);
    CHECK(w.declining);

    // Each trap satisfies exactly one of the two signals; neither alone is
    // the verdict.
    const auto hump = detect_absolute_decline(by_label("hump_trap").series);
    CHECK(hump.fitted_rate < 0.0);
    CHECK(hump.endpoint_ratio > 1.0);
    CHECK_FALSE(hump.declining);

    const auto crash = detect_absolute_decline(by_label("endpoint_crash").series);
    CHECK(crash.fitted_rate > 0.0);
    CHECK(crash.endpoint_ratio < 1.0);
    CHECK_FALSE(crash.declining);
}

TEST_CASE("category names round-trip") {
    for (const auto c : {Category::chemicals, Category::hardware, Category::energy}) {
        CHECK(category_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(category_from_string("plastics"), InvalidArgumentError);
}
