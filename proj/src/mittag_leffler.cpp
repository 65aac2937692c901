#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fracgreen/detail/long_gamma.hpp"
#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;
constexpr double pi = std::numbers::pi;
constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();

// Values of E_beta are O(1) in the left half plane; a regime is taken as
// soon as it reaches this absolute accuracy.
constexpr double kTarget = 1e-15;

void check_order(double beta) {
    if (!(beta > 0.0 && beta <= 2.0)) throw DomainError("Mittag-Leffler order beta must lie in (0, 2]");
}

struct Partial {
    cd value;
    double error;
};

// Power series sum z^n / Gamma(beta n + 1), accumulated in long double.
Partial taylor(double beta, cld z) {
    const long double logr = std::log(std::abs(z));
    const long double arg = std::arg(z);
    const long double peak = std::pow(std::abs(z), 1.0L / beta) / beta;
    detail::CompensatedSum<cld> sum;
    long double rounding = 0.0L;
    long double last = 1.0L;
    sum.add(1.0L);
    for (int n = 1; n < 6000; ++n) {
        const detail::SignedLogLD g = detail::log_gamma_ld(static_cast<long double>(beta) * n + 1.0L);
        const long double lm = n * logr - g.log_abs;
        const long double mag = std::exp(lm);
        const cld term = std::polar(mag, n * arg);
        sum.add(term);
        rounding += mag * eps_ld * (std::abs(lm) + std::abs(n * arg) + 8.0L);
        last = mag;
        if (n > peak + 2 && mag < 1e-22L * std::max(1.0L, std::abs(sum.value()))) break;
    }
    const cld v = sum.value();
    return {cd(static_cast<double>(v.real()), static_cast<double>(v.imag())),
            static_cast<double>(rounding + 4.0L * last + 2.0L * std::numeric_limits<double>::epsilon() * std::abs(v))};
}

// Algebraic expansion -sum z^{-k} / Gamma(1 - beta k), optimally truncated,
// plus the exponential contributions exp(t_k)/beta from the roots
// t_k^beta = z on the principal sheet.
Partial asymptotic(double beta, cd z) {
    const double r = std::abs(z);
    const double phase = std::arg(z);
    const long double logr = std::log(static_cast<long double>(r));

    constexpr int kMax = 1500;
    std::vector<cld> terms;
    terms.reserve(kMax);
    long double lead = 0.0L;
    long double least = std::numeric_limits<long double>::infinity();
    std::array<long double, 3> recent{};
    for (int k = 1; k <= kMax; ++k) {
        const long double g = 1.0L - static_cast<long double>(beta) * k;
        long double mag = 0.0L;
        if (detail::near_gamma_pole(static_cast<double>(g))) {
            terms.emplace_back(0.0L, 0.0L);
        } else {
            const detail::SignedLogLD lg = detail::log_gamma_ld(g);
            mag = std::exp(-k * logr - lg.log_abs);
            terms.push_back(-static_cast<long double>(lg.sign) * std::polar(mag, -static_cast<long double>(k) * phase));
        }
        if (lead == 0.0L) lead = mag;
        recent[static_cast<std::size_t>(k % 3)] = mag;
        if (k < 8) continue;
        const long double env = std::max({recent[0], recent[1], recent[2]});
        least = std::min(least, env);
        // Either the remaining terms are negligible or we are well past the
        // smallest one.
        if (env < 1e-24L * lead || env > 1e6L * least) break;
    }
    const std::size_t n = terms.size();
    auto envelope = [&](std::size_t k) {
        long double e = 0.0L;
        for (std::size_t j = k; j < std::min(n, k + 3); ++j) e = std::max(e, std::abs(terms[j]));
        return e;
    };
    std::size_t best = 0;
    long double best_env = envelope(0);
    for (std::size_t k = 1; k + 2 < n; ++k) {
        const long double e = envelope(k);
        if (e < best_env) {
            best_env = e;
            best = k;
        }
    }
    detail::CompensatedSum<cld> sum;
    for (std::size_t k = 0; k < best; ++k) sum.add(terms[k]);

    double error = static_cast<double>(best_env);
    cd exponential{0.0, 0.0};
    const double w = std::pow(r, 1.0 / beta);
    for (int branch = -1; branch <= 1; ++branch) {
        const double psi = (phase + 2.0 * pi * branch) / beta;
        const cd t = std::polar(w, psi);
        const double mag = std::exp(t.real()) / beta;
        if (std::abs(psi) < pi) exponential += std::exp(t) / beta;
        // Near the Stokes line the weight of this exponential is ambiguous.
        if (std::abs(psi) > 0.75 * pi && std::abs(psi) < 1.25 * pi) error += mag;
    }
    const cld v = sum.value();
    const cd value = cd(static_cast<double>(v.real()), static_cast<double>(v.imag())) + exponential;
    return {value, error + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value)};
}

// Hankel-contour representation collapsed onto the rays arg t = +-phi, with
// the substitution u = r^beta that removes the endpoint singularity.
Partial hankel(double beta, cd z) {
    const double r = std::abs(z);
    const double phase = std::arg(z);
    std::array<double, 3> psi{};
    for (int k = -1; k <= 1; ++k) psi[static_cast<std::size_t>(k + 1)] = std::abs(phase + 2.0 * pi * k) / beta;

    double phi = pi;
    double best_gap = -1.0;
    for (int j = 40; j >= 0; --j) {
        const double cand = pi * (0.6 + 0.4 * j / 40.0);
        double gap = std::numeric_limits<double>::infinity();
        for (double p : psi) gap = std::min(gap, std::abs(p - cand));
        if (gap > best_gap * 1.25) {
            best_gap = gap;
            phi = cand;
        }
    }

    const cd up = std::polar(1.0, phi);
    const cd up_beta = std::polar(1.0, phi * beta);
    const cd lo = std::conj(up);
    const cd lo_beta = std::conj(up_beta);
    auto integrand = [&](double u) -> cd {
        const double ub = std::pow(u, 1.0 / beta);
        const cd g_up = std::exp(ub * up) * up_beta / (u * up_beta - z);
        const cd g_lo = std::exp(ub * lo) * lo_beta / (u * lo_beta - z);
        return (g_up - g_lo) / cd(0.0, 2.0 * pi * beta);
    };

    const double upper = std::pow(46.0 / std::abs(std::cos(phi)), beta);
    std::vector<double> breaks{0.0, upper, 1.0, std::pow(5.0, beta), std::pow(15.0, beta)};
    for (double f : {0.5, 0.9, 1.0, 1.1, 2.0}) breaks.push_back(f * r);
    std::erase_if(breaks, [&](double b) { return b < 0.0 || b > upper; });
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const auto q = detail::integrate(integrand, breaks, 0.2 * kTarget, 0.0, 600);

    cd residues{0.0, 0.0};
    const double w = std::pow(r, 1.0 / beta);
    for (int k = -1; k <= 1; ++k) {
        const double angle = (phase + 2.0 * pi * k) / beta;
        if (std::abs(angle) < phi) residues += std::exp(std::polar(w, angle)) / beta;
    }
    const cd value = q.value + residues;
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * (q.l1 + std::abs(residues));
    return {value, q.error + rounding};
}

// Real-axis form for 0 < beta < 1: a positive integrand, no rotation needed.
Partial real_integral(double beta, double t) {
    const double s = std::sin(pi * beta);
    const double c = std::cos(pi * beta);
    auto integrand = [&](double u) {
        return std::exp(-std::pow(u, 1.0 / beta)) / (u * u + 2.0 * t * u * c + t * t);
    };
    const double upper = std::pow(50.0, beta);
    const double centre = std::max(0.0, -t * c);
    const double width = t * s;
    std::vector<double> breaks{0.0, upper, 1.0, std::pow(5.0, beta), std::pow(20.0, beta)};
    for (double f : {-5.0, -1.0, 0.0, 1.0, 5.0}) breaks.push_back(centre + f * width);
    std::erase_if(breaks, [&](double b) { return b < 0.0 || b > upper; });
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const double scale = t * s / (pi * beta);
    const auto q = detail::integrate(integrand, breaks, 0.0, 1e-14, 600);
    const double value = scale * q.value;
    return {cd(value, 0.0), scale * q.error + 4.0 * std::numeric_limits<double>::epsilon() * value};
}

bool taylor_preferred(double beta, double r) {
    // Largest partial term is about exp(r^{1/beta}) / beta.
    return std::pow(r, 1.0 / beta) <= std::log(1e4 * beta);
}

}  // namespace

EvaluationResult mittag_leffler(double beta, double x, double tol) {
    check_order(beta);
    if (!(x <= 0.0)) throw DomainError("real Mittag-Leffler evaluation requires x <= 0");
    if (x == 0.0) return {1.0, 0.0, Method::ClosedForm};
    if (beta == 1.0) return {std::exp(x), 2.0 * std::numeric_limits<double>::epsilon() * std::exp(x), Method::ClosedForm};
    if (beta == 2.0) return {std::cos(std::sqrt(-x)), 4.0 * std::numeric_limits<double>::epsilon(), Method::ClosedForm};
    if (beta > 1.0) {
        const ComplexEvaluation c = mittag_leffler_complex(beta, cd(x, 0.0), tol);
        return {c.value.real(), c.abs_error, c.method, true};
    }

    const double t = -x;
    if (taylor_preferred(beta, t)) {
        const Partial p = taylor(beta, cld(x, 0.0L));
        if (p.error <= tol) return {p.value.real(), p.error, Method::TaylorSeries};
    }
    const Partial a = asymptotic(beta, cd(x, 0.0));
    if (a.error <= kTarget) return {a.value.real(), a.error, Method::AsymptoticSeries};
    const Partial q = real_integral(beta, t);
    if (q.error <= tol) return {q.value.real(), q.error, Method::Quadrature};
    if (a.error <= tol) return {a.value.real(), a.error, Method::AsymptoticSeries};
    throw AccuracyError("Mittag-Leffler evaluation did not reach tolerance", std::min(a.error, q.error));
}

ComplexEvaluation mittag_leffler_complex(double beta, std::complex<double> z, double tol) {
    check_order(beta);
    if (z.real() > 1e-12 * std::max(1.0, std::abs(z)))
        throw DomainError("complex Mittag-Leffler evaluation requires Re z <= 0");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (z == cd(0.0, 0.0)) return {cd(1.0, 0.0), 0.0, Method::ClosedForm};
    if (beta == 1.0) {
        const cd v = std::exp(z);
        return {v, 2.0 * eps * (1.0 + std::abs(z)) * std::abs(v), Method::ClosedForm};
    }
    if (beta == 2.0) {
        const cd v = std::cosh(std::sqrt(z));
        return {v, 4.0 * eps * std::max(1.0, std::abs(v)), Method::ClosedForm, true};
    }
    const bool shaky = beta > 1.0;
    // Beyond the decay sector E_beta grows, so the tolerance scales with it.
    auto good = [&](const Partial& p, double limit) { return p.error <= limit * std::max(1.0, std::abs(p.value)); };
    const double r = std::abs(z);
    if (taylor_preferred(beta, r)) {
        const Partial p = taylor(beta, cld(z.real(), z.imag()));
        if (good(p, tol)) return {p.value, p.error, Method::TaylorSeries, shaky};
    }
    const Partial a = asymptotic(beta, z);
    if (good(a, kTarget)) return {a.value, a.error, Method::AsymptoticSeries, shaky};
    const Partial h = hankel(beta, z);
    if (good(h, tol)) return {h.value, h.error, Method::Quadrature, shaky};
    if (good(a, tol)) return {a.value, a.error, Method::AsymptoticSeries, shaky};
    throw AccuracyError("complex Mittag-Leffler evaluation did not reach tolerance", std::min(a.error, h.error));
}

}  // namespace fracgreen
