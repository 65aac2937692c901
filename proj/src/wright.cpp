#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fracgreen/detail/long_gamma.hpp"
#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

constexpr double pi = std::numbers::pi;
constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();

struct Partial {
    double value;
    double error;
};

Partial series(double nu, double x) {
    const long double lx = std::log(static_cast<long double>(x));
    detail::CompensatedSum<long double> sum;
    long double rounding = 0.0L;
    long double tail = 0.0L;
    long double prev = 0.0L;
    for (int n = 0; n < 4000; ++n) {
        const long double g = 1.0L - nu - static_cast<long double>(nu) * n;
        long double mag = 0.0L;
        // Only exact poles vanish; a near pole still carries a term of size
        // |g + k| that balances the rounding of nu in the other terms.
        if (!(g <= 0.0L && g == std::floor(g))) {
            const detail::SignedLogLD lg = detail::log_gamma_ld(g);
            const long double lm = n * lx - std::lgamma(n + 1.0L) - lg.log_abs;
            mag = std::exp(lm);
            const int sign = ((n % 2) ? -1 : 1) * lg.sign;
            sum.add(sign * mag);
            // lgammal is good to a few dozen ulps for negative arguments.
            rounding += mag * eps_ld * 64.0L * (std::abs(lm) + 8.0L);
        }
        tail = std::max(mag, prev);
        prev = mag;
        // n! outgrows everything once n exceeds the location of the peak term.
        if (n > 10 && n > 2.0 * std::pow(x, 1.0 / (1.0 - nu)) && tail < 1e-24L * std::max(std::abs(sum.value()), 1e-300L))
            break;
    }
    const long double v = sum.value();
    return {static_cast<double>(v), static_cast<double>(rounding + 2.0L * tail) + std::numeric_limits<double>::epsilon() * std::abs(static_cast<double>(v))};
}

// M_nu(x) = x^{nu/(1-nu)} / ((1-nu) pi) int_0^pi A(phi) exp(-A(phi) y) dphi,
// y = x^{1/(1-nu)}; A increases from A(0) to infinity on (0, pi).
Partial integral(double nu, double x) {
    const double q = 1.0 / (1.0 - nu);
    const double y = std::pow(x, q);
    auto log_a = [&](double phi) {
        return nu * q * std::log(std::sin(nu * phi)) + std::log(std::sin((1.0 - nu) * phi)) - q * std::log(std::sin(phi));
    };
    const double a0 = (1.0 - nu) * std::pow(nu, nu * q);
    auto excess = [&](double phi) { return (std::exp(log_a(phi)) - a0) * y; };

    auto solve = [&](double level) {
        double lo = 0.0;
        double hi = pi;
        for (int i = 0; i < 30; ++i) {
            const double mid = 0.5 * (lo + hi);
            (mid > 0.0 && excess(mid) < level ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    const double upper = solve(700.0);
    std::vector<double> breaks{0.0, upper};
    for (double level : {1.0, 30.0}) breaks.push_back(solve(level));
    if (y > 0.0 && 1.0 / y > a0) {
        // Peak of A exp(-A y) sits where A = 1/y.
        double lo = 0.0;
        double hi = upper;
        for (int i = 0; i < 30; ++i) {
            const double mid = 0.5 * (lo + hi);
            (std::exp(log_a(mid)) < 1.0 / y ? lo : hi) = mid;
        }
        breaks.push_back(lo);
    }
    std::erase_if(breaks, [&](double b) { return b < 0.0 || b > upper; });
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto integrand = [&](double phi) {
        if (phi <= 0.0) return a0;
        const double a = std::exp(log_a(phi));
        return a * std::exp(-(a - a0) * y);
    };
    const double log_scale = nu * q * std::log(x) - a0 * y - std::log((1.0 - nu) * pi);
    if (log_scale < -800.0) return {0.0, 0.0};
    // Rounding in the exponent (a - a0) y grows with y.
    const double exponent_rounding = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + a0 * y);
    const auto r = detail::integrate(integrand, breaks, 0.0, std::max(5e-14, exponent_rounding), 500);
    const double scale = std::exp(log_scale);
    const double value = scale * r.value;
    return {value, scale * r.error + (exponent_rounding + 1e-15) * std::abs(value)};
}

}  // namespace

EvaluationResult wright_m(double nu, double x) {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("Wright function order nu must lie in (0, 1)");
    if (!(x >= 0.0)) throw DomainError("Wright function argument must be nonnegative");
    if (x == 0.0) {
        const double v = reciprocal_gamma(1.0 - nu);
        return {v, 2.0 * std::numeric_limits<double>::epsilon() * v, Method::ClosedForm};
    }
    if (std::isinf(x)) return {0.0, 0.0, Method::AsymptoticSeries};
    // Past y = x^{1/(1-nu)} ~ 20 the series cancels too much to be worth trying.
    const bool try_series = std::pow(x, 1.0 / (1.0 - nu)) < 20.0;
    Partial s{0.0, std::numeric_limits<double>::infinity()};
    if (try_series) {
        s = series(nu, x);
        if (s.error <= std::max(1e-16, 1e-13 * std::abs(s.value))) return {s.value, s.error, Method::TaylorSeries};
    }
    const Partial q = integral(nu, x);
    if (!(q.error >= s.error)) return {q.value, q.error, Method::Quadrature};
    return {s.value, s.error, Method::TaylorSeries};
}

}  // namespace fracgreen
