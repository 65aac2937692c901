#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracgreen/densities.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/mb_engine.hpp"

using namespace fracgreen;

TEST_CASE("pole enumeration with a collision") {
    const GammaFraction f = build_green_fraction(validate(1.5, 0.9, 0.0));
    const auto poles = poles_right(f, 6);
    REQUIRE(poles.size() == 6);
    const double loc[] = {1.0, 1.5, 3.0, 4.5, 6.0, 7.0};
    const int order[] = {1, 1, 2, 1, 1, 1};
    for (std::size_t i = 0; i < poles.size(); ++i) {
        CAPTURE(i);
        CHECK(poles[i].location == doctest::Approx(loc[i]));
        CHECK(poles[i].order == order[i]);
    }
    CHECK_THROWS_AS(residue_series(f, Side::AtZero, 10), CollisionError);
    CHECK_NOTHROW(residue_series(f, Side::AtZero, 2));

    const PowerSeriesExpansion cut = residue_series_until_collision(f, Side::AtZero, 10);
    CHECK(cut.terms.size() == 2);
    CHECK(cut.cut_at == doctest::Approx(3.0));
}

TEST_CASE("coincidences on the left for alpha = 0.5") {
    const GammaFraction f = build_green_fraction(validate(0.5, 0.8, 0.0));
    CHECK_FALSE(coincidences(f, Side::AtInfinity, 20).empty());
}

TEST_CASE("poles are deterministic") {
    const GammaFraction f = build_green_fraction(validate(1.3, 0.7, 0.2));
    const auto a = poles_left(f, 15);
    const auto b = poles_left(f, 15);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].location == b[i].location);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i].location < a[i - 1].location);
}

TEST_CASE("fraction values") {
    const GammaFraction f = build_green_fraction(validate(1.5, 0.8, 0.2));
    const std::complex<double> s(0.4, 3.0);
    CHECK(std::abs(f.value(s) - std::exp(f.log_value(s))) < 1e-14 * std::abs(f.value(s)));
    CHECK_THROWS_AS(build_green_fraction(validate(1.2, 1.2, 0.0)), UnsupportedError);
    CHECK(build_green_fraction(validate(0.5, 0.8, 0.5)).identically_zero());
}

TEST_CASE("stable series at zero") {
    const GammaFraction f = build_green_fraction(validate(1.5, 1.0, 0.0));
    const PowerSeriesExpansion e = residue_series(f, Side::AtZero, 60);
    CHECK(e.nature == Nature::Convergent);
    const EvaluationResult r = evaluate_expansion(e, 1.0, 1e-12);
    // 30-digit Mellin-Barnes quadrature.
    CHECK(std::abs(r.value - 0.20203815960784013) <= 1e-14);
    CHECK(r.method == Method::TaylorSeries);
}

TEST_CASE("time-fractional kernel from both sides") {
    const FractionalTriplet t = validate(2.0, 0.5, 0.0);
    const GammaFraction f = build_green_fraction(t);
    const PowerSeriesExpansion zero = residue_series(f, Side::AtZero, 80);
    for (double x : {0.3, 1.0, 2.0}) {
        const double expect = time_fractional_density(0.5, x).value;
        CHECK(std::abs(evaluate_expansion(zero, x).value - expect) < 1e-13);
    }
}

TEST_CASE("asymptotic expansion at infinity") {
    const FractionalTriplet t = validate(1.2, 0.7, 0.3);
    const GammaFraction f = build_green_fraction(t);
    const PowerSeriesExpansion inf = residue_series_until_collision(f, Side::AtInfinity, 80);
    CHECK(inf.nature == Nature::Asymptotic);
    const EvaluationResult r = evaluate_expansion(inf, 20.0);
    // 30-digit Mellin-Barnes quadrature.
    CHECK(std::abs(r.value - 0.00051291466427097596) <= r.abs_error + 1e-18);
    CHECK(r.abs_error < 1e-12);
}

TEST_CASE("empty expansions") {
    const GammaFraction f = build_green_fraction(validate(1.5, 0.8, 0.2));
    const PowerSeriesExpansion e = residue_series(f, Side::AtZero, 0);
    CHECK_THROWS_AS(evaluate_expansion(e, 1.0, 1e-8), AccuracyError);
    CHECK(std::isinf(evaluate_expansion(e, 1.0).abs_error));
    CHECK_THROWS_AS(evaluate_expansion(e, 0.0), DomainError);
}
