#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/specials.hpp"

using namespace fracgreen;
using cd = std::complex<double>;

// Reference values from 30-digit series or closed forms.

TEST_CASE("log gamma") {
    const SignedLog a = log_gamma(-2.5);
    CHECK(a.log_abs == doctest::Approx(-0.05624371649767405).epsilon(1e-13));
    CHECK(a.sign == -1);
    CHECK(log_gamma(100.5).log_abs == doctest::Approx(361.43554046777762).epsilon(1e-14));
    CHECK(log_gamma(1.0).log_abs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
    const cd z = log_gamma(cd(1.0, 2.0));
    CHECK(z.real() == doctest::Approx(-1.8760787864309293).epsilon(1e-13));
    const cd g = std::exp(z);
    const cd expect = std::exp(cd(-1.8760787864309293, 0.12964631630978831));
    CHECK(std::abs(g - expect) < 1e-14);
    CHECK(reciprocal_gamma(-1.5) == doctest::Approx(0.42314218766081722).epsilon(1e-13));
    CHECK(reciprocal_gamma(-2.0) == 0.0);
}

TEST_CASE("Mittag-Leffler on the negative axis") {
    struct Case {
        double beta, x, expect;
    } cases[] = {
        {0.5, -1.0, 0.4275835761558070},
        {0.5, -10.0, 0.05614099274382259},
        {0.7, -3.0, 0.1378971096650271},
        {0.8, -40.0, 0.005620733063863367},
        {1.5, -2.0, 0.02943068560282647},
    };
    for (const auto& c : cases) {
        const EvaluationResult r = mittag_leffler(c.beta, c.x);
        CAPTURE(c.beta);
        CAPTURE(c.x);
        CHECK(std::abs(r.value - c.expect) <= 1e-13 * std::max(1.0, std::abs(c.expect)));
        CHECK(r.abs_error <= 1e-13);
    }
    CHECK(mittag_leffler(1.0, -2.0).value == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(mittag_leffler(2.0, -4.0).value == doctest::Approx(std::cos(2.0)).epsilon(1e-15));
    CHECK(mittag_leffler(0.6, 0.0).value == 1.0);
}

TEST_CASE("Mittag-Leffler in the left half plane") {
    const ComplexEvaluation a = mittag_leffler_complex(0.5, cd(-1.0, 1.0));
    CHECK(std::abs(a.value - cd(0.30474420525691259, 0.20821893820283163)) < 1e-13);
    const ComplexEvaluation b = mittag_leffler_complex(0.5, cd(-2.0, 3.0));
    CHECK(std::abs(b.value - cd(0.092710766426443334, 0.12831696222826158)) < 1e-13);
    const ComplexEvaluation c = mittag_leffler_complex(1.3, cd(-2.0, 3.0));
    CHECK(std::abs(c.value - cd(-0.53815271296428876, 0.20616448120575025)) < 1e-12);
}

TEST_CASE("Wright M function") {
    CHECK(wright_m(0.5, 1.0).value == doctest::Approx(0.43939128946772240).epsilon(1e-14));
    CHECK(wright_m(0.3, 0.8).value == doctest::Approx(0.45370429604834747).epsilon(1e-14));
    const EvaluationResult far = wright_m(0.6, 6.0);
    CHECK(far.value == doctest::Approx(6.6063158197233883e-08).epsilon(1e-12));
    CHECK(wright_m(0.4, 0.0).value == doctest::Approx(1.0 / std::tgamma(0.6)).epsilon(1e-15));
    // M_{1/2}(x) = exp(-x^2/4) / sqrt(pi)
    for (double x : {0.1, 2.0, 5.0, 9.0}) {
        const double expect = std::exp(-x * x / 4.0) / std::sqrt(std::numbers::pi);
        CHECK(std::abs(wright_m(0.5, x).value - expect) <= 1e-14 * expect + 1e-300);
    }
    CHECK_THROWS_AS(wright_m(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(wright_m(0.5, -1.0), DomainError);
}

TEST_CASE("Wright M error estimates cover the deviation") {
    // M_{1/3}(x) = 3^{2/3} Ai(x / 3^{1/3}); 30-digit values.
    struct Case {
        double x, expect;
    } cases[] = {{0.5, 0.55633383867525532}, {2.0, 0.17366397598105540}, {4.85, 0.0069944316952368230}};
    for (const auto& c : cases) {
        const EvaluationResult r = wright_m(1.0 / 3.0, c.x);
        CAPTURE(c.x);
        CHECK(std::abs(r.value - c.expect) <= 4.0 * r.abs_error + 5e-16 * c.expect);
    }
}
