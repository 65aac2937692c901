#include "fracgreen/densities.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracgreen/detail/expansion_cache.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/params.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

EvaluationResult gaussian(double x) {
    const double v = std::exp(-0.25 * x * x) / (2.0 * std::sqrt(std::numbers::pi));
    return {v, 4.0 * eps * v, Method::ClosedForm};
}

}  // namespace

EvaluationResult neutral_density(double alpha, double theta, double x) {
    validate(alpha, alpha, theta);
    if (x < 0.0) return neutral_density(alpha, -theta, -x);
    const double phi = 0.5 * std::numbers::pi * (alpha - theta);
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    if (x == 0.0) {
        if (alpha > 1.0 || s == 0.0) return {0.0, 0.0, Method::ClosedForm};
        if (alpha == 1.0) return {s / std::numbers::pi, 2.0 * eps, Method::ClosedForm};
        throw DomainError("the neutral density diverges at x = 0 for alpha < 1");
    }
    double v;
    if (x <= 1.0) {
        const double xa = std::pow(x, alpha);
        v = std::pow(x, alpha - 1.0) * s / (std::numbers::pi * (1.0 + 2.0 * xa * c + xa * xa));
    } else {
        const double ya = std::pow(x, -alpha);
        v = std::pow(x, -alpha - 1.0) * s / (std::numbers::pi * (ya * ya + 2.0 * ya * c + 1.0));
    }
    return {v, 8.0 * eps * std::abs(v), Method::ClosedForm};
}

EvaluationResult time_fractional_density(double beta, double x) {
    if (!(beta > 0.0 && beta < 2.0)) throw DomainError("time-fractional density needs 0 < beta < 2");
    EvaluationResult m = wright_m(0.5 * beta, std::abs(x));
    m.value *= 0.5;
    m.abs_error *= 0.5;
    return m;
}

EvaluationResult stable_density(double alpha, double theta, double x, double tol) {
    const FractionalTriplet t = validate(alpha, 1.0, theta);
    if (x < 0.0) return stable_density(alpha, -theta, -x, tol);
    if (alpha == 2.0) return gaussian(x);
    if (alpha == 1.0) return neutral_density(1.0, theta, x);
    if (t.rho() == 0.0) return {0.0, 0.0, Method::ClosedForm};
    if (x == 0.0) return detail::kernel_at_origin(t);
    try {
        return detail::series_kernel(t, x, tol);
    } catch (const AccuracyError&) {
    }
    return mellin_oracle(t, x, default_contour(t), tol);
}

}  // namespace fracgreen
