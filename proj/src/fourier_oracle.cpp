#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

struct Accelerated {
    double value;
    double error;
};

// Wynn's epsilon algorithm on a sequence of partial sums; even columns hold
// the extrapolated estimates.
Accelerated wynn(const std::vector<double>& partial) {
    std::vector<double> older(partial.size() + 1, 0.0);
    std::vector<double> col = partial;
    std::vector<double> estimates{partial.back()};
    bool degenerate = false;
    for (int k = 0; col.size() >= 2 && !degenerate; ++k) {
        std::vector<double> next(col.size() - 1);
        for (std::size_t i = 0; i + 1 < col.size() && !degenerate; ++i) {
            const double d = col[i + 1] - col[i];
            degenerate = d == 0.0 || !std::isfinite(d);
            next[i] = degenerate ? 0.0 : older[i + 1] + 1.0 / d;
        }
        if (degenerate) break;
        older = std::move(col);
        col = std::move(next);
        if (k % 2 == 1) estimates.push_back(col.back());
    }
    if (estimates.size() == 1) {
        const std::size_t n = partial.size();
        return {partial.back(), n >= 2 ? std::abs(partial[n - 1] - partial[n - 2]) : std::numeric_limits<double>::infinity()};
    }
    Accelerated best{estimates.back(), std::numeric_limits<double>::infinity()};
    for (std::size_t i = 1; i < estimates.size(); ++i) {
        const double err = std::abs(estimates[i] - estimates[i - 1]);
        if (err < best.error) best = {estimates[i], err};
    }
    return best;
}

struct Symbol {
    double alpha;
    double beta;
    cd direction;
    double ml_tol;

    cd operator()(double kappa) const {
        if (kappa == 0.0) return {1.0, 0.0};
        const cd z = -std::pow(kappa, alpha) * direction;
        if (beta == 1.0) return std::exp(z);
        return mittag_leffler_complex(beta, z, ml_tol).value;
    }
};

}  // namespace

EvaluationResult fourier_oracle(const FractionalTriplet& t, double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("x must be finite");
    const double a = t.alpha();
    const double b = t.beta();
    const Symbol f{a, b, std::polar(1.0, 0.5 * pi * t.theta()), 1e-13};
    const bool shaky = b > 1.0;
    const double target = 0.25 * tol * pi;
    const double X = std::abs(x);
    const double sx = x < 0.0 ? -1.0 : 1.0;

    auto combined = [&](double k) {
        const cd v = f(k);
        return std::cos(k * x) * v.real() + std::sin(k * x) * v.imag();
    };

    if (b == 1.0) {
        const double damping = std::cos(0.5 * pi * t.theta());
        if (!(damping > 1e-12)) throw UnsupportedError("the characteristic function does not decay for |theta| = 1");
        const double kmax = std::pow(std::log(10.0 * (1.0 + X) / tol) / damping, 1.0 / a);
        std::vector<double> breaks = detail::geometric_breaks(1e-8, std::min(1.0, kmax), 16);
        breaks.insert(breaks.begin(), 0.0);
        const double step = X > 0.0 ? pi / X : kmax;
        for (double k = 1.0; k < kmax; k += std::min(step, 1.0)) breaks.push_back(k);
        breaks.push_back(kmax);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        const auto q = detail::integrate(combined, breaks, target, 0.0, static_cast<int>(breaks.size()) + 4000);
        const double tail = std::exp(-std::pow(kmax, a) * damping) * 2.0;
        const double err = (q.error + tail) / pi;
        if (!(err <= tol)) throw AccuracyError("Fourier oracle did not reach tolerance", err);
        return {q.value / pi, err, Method::Quadrature, shaky};
    }

    // Algebraic decay: E_beta(-w) ~ -sum (-w)^{-k} / Gamma(1 - beta k).
    if (X == 0.0) {
        if (!(a > 1.0)) throw DomainError("the Fourier integral at x = 0 diverges for alpha <= 1 when beta != 1");
        const double big = std::pow(400.0, 1.0 / a);
        std::vector<double> breaks = detail::geometric_breaks(1e-8, big, 48);
        breaks.insert(breaks.begin(), 0.0);
        auto re = [&](double k) { return f(k).real(); };
        const auto q = detail::integrate(re, breaks, target, 0.0, 2000);
        double tail = 0.0;
        double last = 0.0;
        for (int k = 1; k <= 40; ++k) {
            const double g = 1.0 - b * k;
            const double rg = reciprocal_gamma(g);
            const double term = -((k % 2) ? -1.0 : 1.0) * std::cos(0.5 * k * pi * t.theta()) * rg *
                                std::pow(big, 1.0 - a * k) / (a * k - 1.0);
            tail += term;
            last = std::abs(term);
            if (last < 1e-18) break;
        }
        const double err = (q.error + last) / pi + 1e-15;
        if (!(err <= tol)) throw AccuracyError("Fourier oracle did not reach tolerance", err);
        return {(q.value + tail) / pi, err, Method::Quadrature, shaky};
    }

    // Oscillatory case: cosine and sine parts separately, integrated between
    // consecutive zeros of their trigonometric factors and accelerated.
    const double period = pi / X;
    const double start = std::max(3.0, 2.0 * period);
    auto oscillatory = [&](auto&& part, double offset) -> Accelerated {
        // Zeros sit at (j + offset) * period.
        const double j0 = std::ceil(start / period - offset);
        const double head_end = (j0 + offset) * period;
        std::vector<double> breaks = detail::geometric_breaks(1e-8, std::min(1.0, head_end), 16);
        breaks.insert(breaks.begin(), 0.0);
        for (double k = 1.0; k < head_end; k += std::min(period, 1.0)) breaks.push_back(k);
        breaks.push_back(head_end);
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        const auto head = detail::integrate(part, breaks, 0.1 * target, 0.0, static_cast<int>(breaks.size()) + 2000);
        double quad_err = head.error;
        std::vector<double> partial;
        double sum = head.value;
        partial.push_back(sum);
        double best_err = std::numeric_limits<double>::infinity();
        Accelerated best{sum, best_err};
        for (int j = 0; j < 120; ++j) {
            const double lo = (j0 + offset + j) * period;
            const auto p = detail::integrate(part, lo, lo + period, 0.01 * target, 0.0, 200);
            quad_err += p.error;
            sum += p.value;
            partial.push_back(sum);
            // Two overlapping windows must agree before an estimate is taken.
            if (partial.size() >= 16 && partial.size() % 4 == 0) {
                const Accelerated w = wynn(std::vector<double>(partial.end() - 12, partial.end()));
                const Accelerated v = wynn(std::vector<double>(partial.end() - 16, partial.end() - 4));
                const double spread = std::max(w.error, std::abs(w.value - v.value));
                if (spread < best.error) best = {w.value, spread};
                if (best.error < 0.05 * target) break;
            }
        }
        return {best.value, best.error + quad_err};
    };

    auto cos_part = [&](double k) { return std::cos(k * X) * f(k).real(); };
    auto sin_part = [&](double k) { return std::sin(k * X) * f(k).imag(); };
    const Accelerated c = oscillatory(cos_part, 0.5);
    const Accelerated s = oscillatory(sin_part, 0.0);
    const double value = (c.value + sx * s.value) / pi;
    const double err = (c.error + s.error) / pi + 1e-15;
    if (!(err <= tol)) throw AccuracyError("Fourier oracle did not reach tolerance", err);
    return {value, err, Method::Quadrature, shaky};
}

}  // namespace fracgreen
