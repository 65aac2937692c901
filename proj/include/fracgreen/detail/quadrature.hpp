#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) quadrature over a union of
// panels. The integrand may be real or complex valued.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fracgreen::detail {

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    /// Integral of |f|, used for rounding estimates.
    double l1 = 0.0;
    int evaluations = 0;
    bool converged = true;
};

template <class T>
struct Panel {
    double a;
    double b;
    T value;
    double error;
    double l1;
};

template <class T, class F>
Panel<T> kronrod21(F& f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<T, 21> fv;
    fv[0] = f(centre);
    for (std::size_t i = 1; i < x.size(); ++i) {
        fv[2 * i - 1] = f(centre - half * x[i]);
        fv[2 * i] = f(centre + half * x[i]);
    }

    T kronrod = fv[0] * wk[0];
    T gauss{};
    double resabs = std::abs(fv[0]) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        const T pair = fv[2 * i - 1] + fv[2 * i];
        kronrod += pair * wk[i];
        resabs += (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i])) * wk[i];
        if (i % 2 == 1) gauss += pair * wg[i / 2];
    }
    const T mean = kronrod * 0.5;
    double resasc = std::abs(fv[0] - mean) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        resasc += (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean)) * wk[i];

    const double scale = std::abs(half);
    double err = std::abs(kronrod - gauss) * scale;
    resabs *= scale;
    resasc *= scale;
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return Panel<T>{a, b, kronrod * half, err, resabs};
}

/// Integrates f over [breaks.front(), breaks.back()], initially split at the
/// given breakpoints, until the summed error estimate is below
/// max(abs_tol, rel_tol * |value|) or `max_panels` panels are in use.
template <class F>
auto integrate(F f, std::span<const double> breaks, double abs_tol, double rel_tol = 0.0,
               int max_panels = 400) {
    using T = decltype(f(0.0));
    QuadResult<T> out;
    if (breaks.size() < 2) return out;

    std::vector<Panel<T>> heap;
    heap.reserve(static_cast<std::size_t>(max_panels) + breaks.size());
    auto by_error = [](const Panel<T>& l, const Panel<T>& r) { return l.error < r.error; };
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] == breaks[i]) continue;
        heap.push_back(kronrod21<T>(f, breaks[i], breaks[i + 1]));
        out.evaluations += 21;
    }
    std::make_heap(heap.begin(), heap.end(), by_error);

    auto totals = [&] {
        T v{};
        double e = 0.0;
        double l = 0.0;
        for (const auto& p : heap) {
            v += p.value;
            e += p.error;
            l += p.l1;
        }
        out.value = v;
        out.error = e;
        out.l1 = l;
    };
    totals();
    while (out.error > std::max(abs_tol, rel_tol * std::abs(out.value))) {
        if (static_cast<int>(heap.size()) >= max_panels) {
            out.converged = false;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel<T> worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            out.converged = false;
            break;
        }
        heap.push_back(kronrod21<T>(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(kronrod21<T>(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), by_error);
        out.evaluations += 42;
        totals();
    }
    return out;
}

template <class F>
auto integrate(F f, double a, double b, double abs_tol, double rel_tol = 0.0, int max_panels = 400) {
    const double breaks[2] = {a, b};
    return integrate(std::move(f), std::span<const double>(breaks, 2), abs_tol, rel_tol, max_panels);
}

/// Geometrically spaced breakpoints between lo > 0 and hi.
inline std::vector<double> geometric_breaks(double lo, double hi, int panels) {
    std::vector<double> b(static_cast<std::size_t>(panels) + 1);
    const double r = std::log(hi / lo);
    for (int i = 0; i <= panels; ++i) b[static_cast<std::size_t>(i)] = lo * std::exp(r * i / panels);
    b.front() = lo;
    b.back() = hi;
    return b;
}

/// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
public:
    void add(T v) {
        const T t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{};
    T comp_{};
};

}  // namespace fracgreen::detail
