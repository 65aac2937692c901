#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fracgreen/detail/expansion_cache.hpp"
#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/oracles.hpp"

namespace fracgreen {

namespace {

struct Piece {
    double value;
    double error;
};

// int_X^inf x^delta K(x) dx from the algebraic tail of K.
Piece algebraic_tail(const FractionalTriplet& t, double delta, double X, double tol) {
    const double a = t.alpha();
    if (t.alpha() == t.beta()) {
        // N(x) = (1/pi) sum (-1)^{n-1} sin(n phi) x^{-alpha n - 1}, phi = pi alpha rho.
        const double phi = std::numbers::pi * a * t.rho();
        double sum = 0.0;
        double last = 0.0;
        for (int n = 1; n < 200; ++n) {
            // sin(n phi) may vanish, so the stopping test uses the bound.
            const double bound = std::pow(X, delta - a * n) / ((a * n - delta) * std::numbers::pi);
            sum += ((n % 2) ? 1.0 : -1.0) * std::sin(n * phi) * bound;
            last = bound;
            if (last < 1e-3 * tol * 1e-3 && n > 2) break;
        }
        return {sum, last};
    }

    const auto cal = detail::calibrated_expansions(t);
    if (cal->at_infinity && (cal->at_infinity->exact_zero || X >= cal->at_infinity->radius_hint)) {
        const PowerSeriesExpansion& e = *cal->at_infinity;
        if (e.exact_zero) return {0.0, 0.0};
        double sum = 0.0;
        double smallest = std::numeric_limits<double>::infinity();
        for (const auto& term : e.terms) {
            const double p = delta + static_cast<double>(term.exponent) + 1.0;
            const double v = -term.sign * std::exp(static_cast<double>(term.log_abs) + p * std::log(X)) / p;
            if (e.nature == Nature::Asymptotic && std::abs(v) > smallest) break;
            smallest = std::min(smallest, std::abs(v));
            sum += v;
            if (smallest < 1e-20) break;
        }
        return {sum, smallest};
    }

    // No trusted expansion: fit K x^{alpha+1} = C + D x^{-alpha} at X and 2X.
    const double k1 = reduced_green(t, X, 1e-12).value * std::pow(X, a + 1.0);
    const double k2 = reduced_green(t, 2.0 * X, 1e-12).value * std::pow(2.0 * X, a + 1.0);
    const double r = std::pow(2.0, -a);
    const double D = (k1 - k2) / (std::pow(X, -a) * (1.0 - r));
    const double C = k1 - D * std::pow(X, -a);
    const double first = C * std::pow(X, delta - a) / (a - delta);
    const double second = D * std::pow(X, delta - 2.0 * a) / (2.0 * a - delta);
    return {first + second, std::abs(second) * std::pow(X, -a) + 1e-3 * std::abs(second)};
}

// int_0^h x^delta N(x) dx for the neutral density, from its series in x^alpha.
Piece neutral_head(const FractionalTriplet& t, double delta, double h, double tol) {
    const double a = t.alpha();
    const double phi = std::numbers::pi * a * t.rho();
    double sum = 0.0;
    double last = 0.0;
    for (int n = 1; n < 200; ++n) {
        // sin(n phi) may vanish, so the stopping test uses the bound.
        const double bound = std::pow(h, delta + a * n) / ((a * n + delta) * std::numbers::pi);
        sum += ((n % 2) ? 1.0 : -1.0) * std::sin(n * phi) * bound;
        last = bound;
        if (last < 1e-6 * tol && n > 2) break;
    }
    return {sum, last};
}

}  // namespace

EvaluationResult quadrature_moment(const FractionalTriplet& t, double delta, double tol) {
    // Validates delta against the strip.
    (void)moment(t, delta);
    if (classify(t) == DiffusionClass::Wave) throw WaveCaseError();
    const double a = t.alpha();
    const double k_tol = std::clamp(1e-3 * tol, 1e-13, 1e-8);
    auto integrand_at = [&](double x, double kt) { return std::pow(x, delta) * reduced_green(t, x, kt).value; };
    auto integrand = [&](double x) { return integrand_at(x, k_tol); };

    // Head: dyadic panels towards zero, closed by a geometric remainder once
    // the panel ratio has settled.
    double head = 0.0;
    double head_err = 0.0;
    double previous = std::numeric_limits<double>::quiet_NaN();
    double previous_rest = std::numeric_limits<double>::quiet_NaN();
    double hi = 1.0;
    bool closed = false;
    if (a == t.beta()) {
        const double h = 1.0 / 60.0;
        const Piece p = neutral_head(t, delta, h, tol);
        const auto q = detail::integrate(integrand, detail::geometric_breaks(h, 1.0, 24), 0.1 * tol, 0.0, 2000);
        head = p.value + q.value;
        head_err = p.error + q.error;
        closed = true;
    }
    for (int k = 0; k < 300 && !closed; ++k) {
        const double lo = 0.5 * hi;
        // A short panel tolerates a proportionally larger pointwise error.
        const double kt = std::clamp(1e-3 * tol / (hi - lo), k_tol, 1e-3);
        const auto q = detail::integrate([&](double x) { return integrand_at(x, kt); }, lo, hi, 1e-3 * tol);
        head += q.value;
        head_err += q.error;
        if (q.value == 0.0 && k >= 4) {
            closed = true;
            break;
        }
        if (k >= 4 && std::isfinite(previous) && previous != 0.0) {
            const double ratio = q.value / previous;
            if (ratio > 0.0 && ratio < 0.95) {
                const double rest = q.value * ratio / (1.0 - ratio);
                const double spread = std::isfinite(previous_rest) ? std::abs(rest - previous_rest * ratio) : std::abs(rest);
                const double rest_err = spread / (1.0 - ratio);
                if (rest_err < 0.1 * tol) {
                    head += rest;
                    head_err += rest_err + 1e-3 * tol;
                    closed = true;
                    break;
                }
                previous_rest = rest;
            } else {
                previous_rest = std::numeric_limits<double>::quiet_NaN();
            }
        }
        previous = q.value;
        hi = lo;
    }
    if (!closed) throw AccuracyError("moment quadrature does not settle near x = 0", std::numeric_limits<double>::infinity());

    // Body and tail.
    double body = 0.0;
    double body_err = 0.0;
    Piece tail{0.0, 0.0};
    if (a == 2.0) {
        double X = 1.0;
        while (X < 1e4 && std::abs(integrand(X)) * X > 1e-4 * tol) X *= 1.5;
        const auto breaks = detail::geometric_breaks(1.0, X, 40);
        const auto q = detail::integrate(integrand, breaks, 0.1 * tol, 0.0, 2000);
        body = q.value;
        body_err = q.error;
        tail = {0.0, std::abs(integrand(X)) * X};
    } else {
        double X = 60.0;
        if (a != t.beta()) {
            const auto cal = detail::calibrated_expansions(t);
            if (cal->at_infinity && !cal->at_infinity->exact_zero && std::isfinite(cal->at_infinity->radius_hint))
                X = std::max(X, cal->at_infinity->radius_hint);
        }
        const auto breaks = detail::geometric_breaks(1.0, X, 48);
        const auto q = detail::integrate(integrand, breaks, 0.1 * tol, 0.0, 2000);
        body = q.value;
        body_err = q.error;
        tail = algebraic_tail(t, delta, X, tol);
    }

    const double value = head + body + tail.value;
    const double error = head_err + body_err + tail.error + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    if (!(error <= tol)) throw AccuracyError("moment quadrature did not reach tolerance", error);
    return {value, error, Method::Quadrature, t.beta() > 1.0, !t.probabilistic()};
}

}  // namespace fracgreen
