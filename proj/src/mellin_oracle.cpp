#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/mb_engine.hpp"
#include "fracgreen/oracles.hpp"

namespace fracgreen {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

// Exponential decay rate of |F(gamma + i tau)| as tau grows.
double decay_rate(const GammaFraction& f) {
    double c = 0.0;
    for (const auto& n : f.numerator()) c += std::abs(n.a);
    for (const auto& d : f.denominator()) c -= std::abs(d.a);
    return 0.5 * pi * c;
}

// Rate of change of the phase of F(gamma + i tau) x^{i tau} at large tau.
double phase_rate(const GammaFraction& f, double tau, double lx) {
    double w = lx;
    for (const auto& n : f.numerator())
        if (n.a != 0.0) w += n.a * std::log(std::max(1.0, std::abs(n.a) * tau));
    for (const auto& d : f.denominator())
        if (d.a != 0.0) w -= d.a * std::log(std::max(1.0, std::abs(d.a) * tau));
    return w;
}

}  // namespace

EvaluationResult mellin_oracle(const FractionalTriplet& t, double x, double gamma, double tol) {
    if (!(x > 0.0)) throw DomainError("the Mellin-Barnes oracle needs x > 0");
    const GammaFraction f = build_green_fraction(t);
    const Strip st = f.strip();
    if (!(gamma > st.gamma_min && gamma < st.gamma_max))
        throw DomainError("contour abscissa gamma must lie strictly inside the strip of analyticity");
    if (f.identically_zero()) return {0.0, 0.0, Method::Quadrature};

    const double c = decay_rate(f);
    if (!(c > 0.0)) throw AccuracyError("the Mellin-Barnes kernel does not decay along the contour", std::numeric_limits<double>::infinity());

    const double lx = std::log(x);
    auto integrand = [&](double tau) {
        const cd s(gamma, tau);
        return std::exp(f.log_value(s) + s * lx).real();
    };
    auto magnitude = [&](double tau) {
        const cd s(gamma, tau);
        return std::exp(f.log_value(s).real() + gamma * lx);
    };

    // Integrand units: K = integral / (pi x).
    const double scale = pi * x;
    const double target = 0.25 * tol * scale;

    std::vector<double> breaks{0.0};
    double tau = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    constexpr double kMaxTau = 2e5;
    while (tau < kMaxTau) {
        const double w = std::abs(phase_rate(f, tau, lx));
        tau += std::clamp(2.5 * pi / std::max(w, 1e-300), 0.05, 3.0);
        breaks.push_back(tau);
        const double m = magnitude(tau);
        if (tau > 2.0 && m / c < 0.1 * target * std::min(1.0, tau / 20.0)) {
            tail = m / c;
            break;
        }
    }
    if (std::isinf(tail)) throw AccuracyError("Mellin-Barnes contour integral did not decay within range", std::numeric_limits<double>::infinity());

    const int cap = static_cast<int>(breaks.size()) + 4000;
    const auto q = detail::integrate(integrand, breaks, target, 0.0, cap);

    // Phase rounding: arguments of size ~tau log tau carry absolute error ~eps times that.
    const double phase_size = 20.0 + tau * std::abs(phase_rate(f, tau, lx));
    const double rounding = q.l1 * std::numeric_limits<double>::epsilon() * phase_size;
    const double value = q.value / scale;
    const double error = (q.error + tail + rounding) / scale;
    if (!(error <= tol)) throw AccuracyError("Mellin-Barnes contour quadrature did not reach tolerance", error);
    return {value, error, Method::Quadrature};
}

double default_contour(const FractionalTriplet& t) noexcept { return 0.5 * std::min(t.alpha(), 1.0); }

}  // namespace fracgreen
