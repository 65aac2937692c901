#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgreen/densities.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"

using namespace fracgreen;

constexpr double pi = std::numbers::pi;

TEST_CASE("Gaussian through the scaling law") {
    const FractionalTriplet t = validate(2.0, 1.0, 0.0);
    for (double time : {1.0, 4.0})
        for (double x : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const double expect = std::exp(-x * x / (4.0 * time)) / (2.0 * std::sqrt(pi * time));
            CHECK(std::abs(green(t, x, time).value - expect) <= 1e-12);
        }
    CHECK(reduced_green(t, 1.0).value == doctest::Approx(0.2196956447338612).epsilon(1e-14));
}

TEST_CASE("Cauchy at the origin") {
    CHECK(reduced_green(validate(1.0, 1.0, 0.0), 0.0).value == doctest::Approx(1.0 / pi).epsilon(1e-15));
}

TEST_CASE("general space-time kernels") {
    // 30-digit Mellin-Barnes quadrature.
    struct Case {
        double a, b, th, x, expect;
    } cases[] = {
        {1.5, 0.8, 0.2, 0.5, 0.22307985879222701},
        {0.7, 0.5, 0.3, 1.3, 0.036481434659325140},
        {1.2, 0.7, 0.3, 2.0, 0.044852253525589292},
        {1.2, 0.7, 0.3, 20.0, 0.00051291466427097596},
        {1.8, 0.9, 0.1, 0.2, 0.29013473117437694},
        {1.5, 1.2, 0.0, 1.0, 0.24046952671958516},
        {1.2, 1.5, 0.0, 2.0, 0.060819595842580167},
    };
    for (const auto& c : cases) {
        const FractionalTriplet t = validate(c.a, c.b, c.th);
        const EvaluationResult r = reduced_green(t, c.x, 1e-11);
        CAPTURE(c.a);
        CAPTURE(c.b);
        CAPTURE(c.x);
        CHECK(std::abs(r.value - c.expect) <= 1e-11);
        CHECK(std::abs(r.value - c.expect) <= 4.0 * r.abs_error + 1e-15 * c.expect);
    }
}

TEST_CASE("flags") {
    const EvaluationResult a = reduced_green(validate(1.5, 1.2, 0.0), 1.0);
    CHECK(a.reduced_confidence);
    CHECK_FALSE(a.non_probabilistic);
    const EvaluationResult b = reduced_green(validate(1.2, 1.5, 0.0), 0.5, 1e-10);
    CHECK(b.non_probabilistic);
    CHECK(b.value == doctest::Approx(0.46886445632155581).epsilon(1e-10));
    CHECK_FALSE(reduced_green(validate(1.5, 0.8, 0.2), 0.5).non_probabilistic);
}

TEST_CASE("value at the origin") {
    // Leading residue Gamma(1/a) Gamma(1-1/a) / (a Gamma(1-b/a) Gamma(rho) Gamma(1-rho)).
    const EvaluationResult r = reduced_green(validate(1.5, 0.8, 0.2), 0.0);
    CHECK(r.value == doctest::Approx(0.39677544920504465).epsilon(1e-14));
    // Leading pole below s = 1: K ~ x^{alpha - 1}.
    CHECK_THROWS_AS(reduced_green(validate(0.8, 0.5, 0.0), 0.0), DomainError);
}

TEST_CASE("symmetry relation") {
    for (const auto& t : {validate(1.5, 0.8, 0.2), validate(0.7, 0.5, 0.3), validate(1.5, 1.0, -0.4)})
        for (double x : {0.3, 1.0, 4.0}) CHECK(reduced_green(t, -x).value == reduced_green(t.mirrored(), x).value);
}

TEST_CASE("domain handling") {
    const FractionalTriplet wave = validate(2.0, 2.0, 0.0);
    CHECK_THROWS_AS(reduced_green(wave, 0.5), WaveCaseError);
    CHECK_THROWS_AS(green(validate(1.5, 0.8, 0.0), 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(evaluate(GreenRequest{validate(1.5, 0.8, 0.0), 1.0, 1.0, 1e-16}), DomainError);
    CHECK_THROWS_AS(reduced_green(validate(1.5, 0.8, 0.0), std::nan("")), DomainError);
    CHECK_NOTHROW(evaluate(GreenRequest{validate(1.5, 0.8, 0.0), 1.0, 2.0, 1e-8}));
}

TEST_CASE("subordination") {
    for (double b : {0.5, 0.8})
        for (double x : {0.25, 1.0, 3.0}) {
            const FractionalTriplet t = validate(2.0, b, 0.0);
            const double s = subordination_integral(t, x, 1e-9, SubordinationBranch::Stable).value;
            CHECK(std::abs(s - time_fractional_density(b, x).value) < 1e-8);
        }
    const FractionalTriplet t = validate(1.5, 1.2, 0.0);
    CHECK(subordination_integral(t, 1.0, 1e-9, SubordinationBranch::Neutral).value ==
          doctest::Approx(0.24046952671958516).epsilon(1e-8));
    CHECK_THROWS_AS(subordination_integral(t, 1.0, 1e-9, SubordinationBranch::Stable), DomainError);
    CHECK_THROWS_AS(subordination_integral(t, 0.0, 1e-9, SubordinationBranch::Neutral), DomainError);
}

TEST_CASE("closed-form moments") {
    CHECK(moment(validate(2.0, 1.0, 0.0), 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(moment(validate(2.0, 0.5, 0.0), 2.0) == doctest::Approx(1.1283791670955126).epsilon(1e-13));
    const FractionalTriplet t = validate(1.2, 0.7, 0.3);
    CHECK(moment(t, 0.0) == doctest::Approx(t.rho()).epsilon(1e-14));
    CHECK_THROWS_AS(moment(validate(1.5, 1.0, 0.0), 1.6), DomainError);
    CHECK_THROWS_AS(moment(validate(1.5, 1.0, 0.0), -1.0), DomainError);
}
