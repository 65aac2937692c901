#include "fracgreen/detail/expansion_cache.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "fracgreen/errors.hpp"
#include "fracgreen/oracles.hpp"

namespace fracgreen::detail {

namespace {

constexpr int kTerms = 200;
constexpr double kTrust = 1e-10;

using Key = std::tuple<double, double, double>;

struct Cache {
    std::shared_mutex mutex;
    std::map<Key, std::shared_ptr<const CalibratedExpansions>> entries;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::array<double, 12> samples() {
    std::array<double, 12> xs{};
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1e-4 * std::pow(1e6, static_cast<double>(i) / 11.0);
    return xs;
}

bool trusted_at(const FractionalTriplet& t, const PowerSeriesExpansion& e, double x) {
    EvaluationResult s;
    try {
        s = evaluate_expansion(e, x, kTrust);
    } catch (const AccuracyError&) {
        return false;
    }
    try {
        const EvaluationResult o = mellin_oracle(t, x, default_contour(t), 1e-11);
        return std::abs(s.value - o.value) <= 2.0 * kTrust + s.abs_error + o.abs_error;
    } catch (const Error&) {
        return true;
    }
}

std::optional<PowerSeriesExpansion> build(const FractionalTriplet& t, const GammaFraction& f, Side side) {
    PowerSeriesExpansion e = residue_series_until_collision(f, side, kTerms);
    if (e.exact_zero) return e;
    if (e.terms.empty()) return std::nullopt;
    // Trust is taken as monotone along the samples, ordered here from the
    // expansion point outwards, so a bisection finds the last trusted one.
    auto xs = samples();
    if (side == Side::AtInfinity) std::reverse(xs.begin(), xs.end());
    std::size_t good = 0;
    std::size_t bad = xs.size() + 1;
    // Invariant: samples [0, good) trusted, sample bad - 1 onwards not.
    if (trusted_at(t, e, xs.back())) {
        good = xs.size();
    } else {
        bad = xs.size();
        while (good + 1 < bad) {
            const std::size_t mid = (good + bad) / 2;
            if (trusted_at(t, e, xs[mid - 1]))
                good = mid;
            else
                bad = mid;
        }
    }
    if (side == Side::AtZero)
        e.radius_hint = good == 0 ? 0.0 : xs[good - 1];
    else
        e.radius_hint = good == 0 ? std::numeric_limits<double>::infinity() : xs[good - 1];
    return e;
}

std::shared_ptr<const CalibratedExpansions> calibrate(const FractionalTriplet& t) {
    auto out = std::make_shared<CalibratedExpansions>();
    const GammaFraction f = build_green_fraction(t);
    out->at_zero = build(t, f, Side::AtZero);
    out->at_infinity = build(t, f, Side::AtInfinity);
    return out;
}

}  // namespace

bool CalibratedExpansions::collided() const noexcept {
    auto cut = [](const std::optional<PowerSeriesExpansion>& e) { return !e || !std::isnan(e->cut_at); };
    return cut(at_zero) || cut(at_infinity);
}

std::shared_ptr<const CalibratedExpansions> calibrated_expansions(const FractionalTriplet& t) {
    const Key key{t.alpha(), t.beta(), t.theta()};
    Cache& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
    }
    auto fresh = calibrate(t);
    std::unique_lock lock(c.mutex);
    c.entries[key] = fresh;
    return fresh;
}

std::size_t expansion_cache_size() {
    std::shared_lock lock(cache().mutex);
    return cache().entries.size();
}

void clear_expansion_cache() {
    std::unique_lock lock(cache().mutex);
    cache().entries.clear();
}

EvaluationResult series_kernel(const FractionalTriplet& t, double x, double tol) {
    const auto e = calibrated_expansions(t);
    double best = std::numeric_limits<double>::infinity();
    auto attempt = [&](const std::optional<PowerSeriesExpansion>& p, bool inside) -> std::optional<EvaluationResult> {
        if (!p || !inside) return std::nullopt;
        try {
            return evaluate_expansion(*p, x, tol);
        } catch (const AccuracyError& err) {
            best = std::min(best, err.achieved());
            return std::nullopt;
        }
    };
    const bool near = e->at_zero && x <= e->at_zero->radius_hint;
    const bool far = e->at_infinity && x >= e->at_infinity->radius_hint;
    // The expansion whose own region is deeper in wins the first attempt.
    const bool zero_first = !far || (near && x * x <= e->at_zero->radius_hint * e->at_infinity->radius_hint);
    if (zero_first) {
        if (auto r = attempt(e->at_zero, near)) return *r;
        if (auto r = attempt(e->at_infinity, far)) return *r;
    } else {
        if (auto r = attempt(e->at_infinity, far)) return *r;
        if (auto r = attempt(e->at_zero, near)) return *r;
    }
    throw AccuracyError("no residue expansion is trusted at this x", best);
}

EvaluationResult kernel_at_origin(const FractionalTriplet& t) {
    const GammaFraction f = build_green_fraction(t);
    if (f.identically_zero()) return {0.0, 0.0, Method::TaylorSeries};
    // Only the leading pole matters: exponent s0 - 1 < 0 diverges, s0 = 1
    // gives the value, s0 > 1 gives zero.
    const std::vector<Pole> lead = poles_right(f, 1);
    if (lead.empty() || lead.front().location > 1.0 + 1e-12) return {0.0, 0.0, Method::TaylorSeries};
    if (lead.front().location < 1.0 - 1e-12 || lead.front().order > 1)
        throw DomainError("the reduced Green function diverges at x = 0 for these parameters");
    const PowerSeriesExpansion z = residue_series(f, Side::AtZero, 1);
    const double value = z.terms.front().coefficient();
    return {value, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value), Method::TaylorSeries};
}

}  // namespace fracgreen::detail
