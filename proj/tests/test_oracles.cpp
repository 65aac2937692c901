#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/specials.hpp"

using namespace fracgreen;

TEST_CASE("Fourier oracle on closed forms") {
    const FractionalTriplet g = validate(2.0, 1.0, 0.0);
    CHECK(std::abs(fourier_oracle(g, 1.0).value - 0.2196956447338612) < 1e-9);
    const FractionalTriplet c = validate(1.0, 1.0, 0.0);
    CHECK(std::abs(fourier_oracle(c, 0.0).value - 1.0 / std::numbers::pi) < 1e-9);
    CHECK(std::abs(fourier_oracle(c, 3.0).value - 1.0 / (std::numbers::pi * 10.0)) < 1e-9);
}

TEST_CASE("Fourier oracle pinned value") {
    // 30-digit Mellin-Barnes quadrature.
    const EvaluationResult r = fourier_oracle(validate(1.5, 0.8, 0.2), 0.5, 1e-10);
    CHECK(std::abs(r.value - 0.22307985879222701) < 1e-10);
}

TEST_CASE("Mellin oracle") {
    const FractionalTriplet g = validate(2.0, 1.0, 0.0);
    CHECK(std::abs(mellin_oracle(g, 1.0, 0.5).value - 0.2196956447338612) < 1e-10);
    const FractionalTriplet tf = validate(2.0, 0.5, 0.0);
    CHECK(std::abs(mellin_oracle(tf, 1.0, 0.5).value - 0.5 * wright_m(0.25, 1.0).value) < 1e-10);
    CHECK_THROWS_AS(mellin_oracle(validate(1.2, 1.2, 0.0), 1.0, 0.5), UnsupportedError);
    CHECK(default_contour(validate(0.6, 0.5, 0.0)) == doctest::Approx(0.3));
}

TEST_CASE("contour invariance") {
    const FractionalTriplet t = validate(1.5, 0.8, 0.2);
    for (double x : {0.5, 2.0})
        CHECK(std::abs(mellin_oracle(t, x, 0.3).value - mellin_oracle(t, x, 0.7).value) < 1e-10);
}

TEST_CASE("error estimates are honest") {
    const FractionalTriplet t = validate(0.7, 0.5, 0.3);
    const EvaluationResult coarse = mellin_oracle(t, 1.3, default_contour(t), 1e-6);
    CHECK(std::abs(coarse.value - 0.036481434659325140) <= coarse.abs_error);
    const EvaluationResult f = fourier_oracle(t, 1.3, 1e-7);
    CHECK(std::abs(f.value - 0.036481434659325140) <= f.abs_error);
}

TEST_CASE("quadrature moments") {
    CHECK(std::abs(quadrature_moment(validate(2.0, 1.0, 0.0), 2.0).value - 1.0) < 1e-6);
    const FractionalTriplet s = validate(1.5, 1.0, 0.0);
    CHECK(std::abs(quadrature_moment(s, 1.0, 1e-8).value - moment(s, 1.0)) < 1e-5);
    const FractionalTriplet t = validate(1.2, 0.7, 0.3);
    CHECK(std::abs(quadrature_moment(t, 0.0, 1e-8).value - t.rho()) < 1e-6);
    CHECK_THROWS_AS(quadrature_moment(s, 2.0), DomainError);
}
