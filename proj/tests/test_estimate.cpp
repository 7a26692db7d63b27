#include <cmath>
#include <random>

#include <doctest.h>

#include "demat/errors.hpp"
#include "demat/estimate.hpp"
#include "fixtures.hpp"

using namespace demat;

namespace {

TimeSeries series_from(std::initializer_list<Observation> observations,
                       SeriesKind kind = SeriesKind::consumption) {
    TimeSeries s;
    s.observations = observations;
    s.label = "test";
    s.kind = kind;
    return s;
}

}  // namespace

TEST_CASE("fit_exponential recovers an exact exponential") {
    const auto fit = fit_exponential(series_from(
        {{0.0, 1.0}, {1.0, std::exp(0.1)}, {2.0, std::exp(0.2)}}));
    CHECK(std::fabs(fit.rate - 0.1) < 1e-12);
    CHECK(fit.r_squared == 1.0);
    CHECK(fit.ln_intercept == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.n_points == 3);
}

TEST_CASE("fit_exponential treats a constant series as a perfect zero-rate fit") {
    const auto fit = fit_exponential(series_from({{2000.0, 5.0}, {2001.0, 5.0}, {2002.0, 5.0}}));
    CHECK(fit.rate == 0.0);
    CHECK(fit.r_squared == 1.0);
    CHECK(fit.ln_intercept == doctest::Approx(std::log(5.0)).epsilon(1e-15));
}

TEST_CASE("fit_exponential recovers the generating rate through 1% noise") {
    const auto fit = fit_exponential(fixtures::noisy_exponential_series());
    CHECK(std::fabs(fit.rate - fixtures::kNoisyGeneratingRate) < 0.003);
    CHECK(fit.n_points == 31);
    CHECK(fit.r_squared > 0.99);
}

TEST_CASE("fit_exponential rejects unusable series") {
    CHECK_THROWS_AS(fit_exponential(series_from({{2000.0, 1.0}})), InsufficientDataError);

    try {
        fit_exponential(series_from({{1972.0, 2.0}, {1973.0, -1.0}, {1974.0, 2.0}}));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("1973") != std::string::npos);
    }

    CHECK_THROWS_AS(fit_exponential(series_from({{2000.0, 1.0}, {2000.0, 2.0}})),
                    MalformedSeriesError);
    CHECK_THROWS_AS(fit_exponential(series_from({{2001.0, 1.0}, {2000.0, 2.0}})),
                    MalformedSeriesError);
}

TEST_CASE("fit is scale invariant and time-shift invariant") {
    std::mt19937 rng(23u);
    TimeSeries base;
    base.label = "base";
    base.kind = SeriesKind::demand;
    for (int t = 0; t <= 20; ++t) {
        base.observations.push_back(
            {1950.0 + t, 2.5 * std::exp(0.04 * t) * (1.0 + 0.03 * std::sin(double(t)))});
    }
    const auto fit = fit_exponential(base);

    const double scale = 1000.0;
    TimeSeries scaled = base;
    for (auto& obs : scaled.observations) obs.value *= scale;
    const auto scaled_fit = fit_exponential(scaled);
    CHECK(std::fabs(scaled_fit.rate - fit.rate) < 1e-12);
    CHECK(std::fabs(scaled_fit.r_squared - fit.r_squared) < 1e-12);
    CHECK(std::fabs(scaled_fit.ln_intercept - (fit.ln_intercept + std::log(scale))) < 1e-12);

    TimeSeries shifted = base;
    for (auto& obs : shifted.observations) obs.year += 137.0;
    const auto shifted_fit = fit_exponential(shifted);
    CHECK(shifted_fit.rate == fit.rate);
    CHECK(shifted_fit.ln_intercept == fit.ln_intercept);

    (void)rng;
}

TEST_CASE("exact exponentials are recovered almost perfectly at any rate") {
    std::mt19937 rng(29u);
    for (int i = 0; i < 50; ++i) {
        const double rate = fixtures::uniform_in(rng, -0.5, 0.7);
        const double level = fixtures::uniform_in(rng, 0.01, 50.0);
        TimeSeries s;
        s.label = "exact";
        for (int t = 0; t <= 25; ++t) {
            s.observations.push_back({1900.0 + t, level * std::exp(rate * t)});
        }
        const auto fit = fit_exponential(s);
        CHECK(std::fabs(fit.rate - rate) < 1e-9);
        CHECK(fit.r_squared > 1.0 - 1e-12);
    }
}

TEST_CASE("elasticity_from_rates divides the growth rate by k plus gdp growth") {
    const double ammonia = elasticity_from_rates(0.109302, 0.090698, 0.05);
    CHECK(ammonia == doctest::Approx(0.7768553924007449).epsilon(1e-12));
    CHECK(std::fabs(ammonia - 0.77686) < 1e-4);

    const double dram = elasticity_from_rates(0.604651, 0.44186, 0.03);
    CHECK(dram == doctest::Approx(1.2814203365404995).epsilon(1e-12));
    CHECK(std::fabs(dram - 1.281419) < 1e-4);

    CHECK(elasticity_from_rates(0.0, 0.05, 0.03) == 0.0);
}

TEST_CASE("elasticity_from_rates floors the denominator") {
    CHECK_THROWS_AS(elasticity_from_rates(0.1, 1e-10, 0.0), SingularDenominatorError);
    CHECK_THROWS_AS(elasticity_from_rates(0.1, 0.05, -0.05), SingularDenominatorError);
    CHECK_NOTHROW(elasticity_from_rates(0.1, 1e-8, 0.0));
}

TEST_CASE("elasticity_from_rates is homogeneous of degree zero") {
    std::mt19937 rng(31u);
    for (int i = 0; i < 200; ++i) {
        const double g = fixtures::uniform_in(rng, -0.3, 0.7);
        const double k = fixtures::uniform_in(rng, 0.01, 0.7);
        const double gdp = fixtures::uniform_in(rng, 0.0, 0.1);
        const double c = fixtures::uniform_in(rng, 0.1, 10.0);
        const double eps = elasticity_from_rates(g, k, gdp);
        const double scaled = elasticity_from_rates(c * g, c * k, c * gdp);
        CHECK(std::fabs(eps - scaled) < 1e-12 * std::max(1.0, std::fabs(eps)));
    }
}

TEST_CASE("log-base conversions") {
    CHECK(log10_rate_to_ln(0.0) == 0.0);
    CHECK(log10_rate_to_ln(0.1) == doctest::Approx(0.2302585092994046).epsilon(1e-15));
    std::mt19937 rng(37u);
    for (int i = 0; i < 100; ++i) {
        const double r = fixtures::uniform_in(rng, -1.0, 1.0);
        CHECK(std::fabs(ln_rate_to_log10(log10_rate_to_ln(r)) - r) < 1e-15);
    }
    CHECK_THROWS_AS(log10_rate_to_ln(std::numeric_limits<double>::infinity()),
                    InvalidArgumentError);
}

TEST_CASE("series kind round-trips through names") {
    for (const auto* name :
         {"price", "demand", "gdp_per_capita", "population", "consumption", "rate"}) {
        CHECK(std::string(to_string(series_kind_from_string(name))) == name);
    }
    CHECK_THROWS_AS(series_kind_from_string("bogus"), InvalidArgumentError);
}
