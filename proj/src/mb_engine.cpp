#include "fracgreen/mb_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>

#include "fracgreen/detail/long_gamma.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

constexpr double kCancelTol = 1e-13;
constexpr double kCollisionTol = 1e-9;
constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();

bool same_factor(const GammaFactor& l, const GammaFactor& r) {
    return std::abs(l.a - r.a) <= kCancelTol * std::max(1.0, std::abs(l.a)) &&
           std::abs(l.b - r.b) <= kCancelTol * std::max(1.0, std::abs(l.b));
}

bool collide(double s1, double s2) { return std::abs(s1 - s2) < kCollisionTol * std::max(1.0, std::abs(s1)); }

struct Singularity {
    long double s;
    bool numerator;
    std::size_t factor;
    int m;
};

struct Group {
    std::vector<Singularity> members;
    int net() const {
        int n = 0;
        for (const auto& s : members) n += s.numerator ? 1 : -1;
        return n;
    }
    double location() const { return static_cast<double>(members.front().s); }
};

// Singular points of the individual factors on one side of the strip, merged
// into groups of coincident points and ordered away from the strip.
std::vector<Group> singular_groups(const GammaFraction& f, Side side, int wanted_poles, bool poles_only) {
    const bool right = side == Side::AtZero;
    const Strip st = f.strip();
    std::vector<Group> groups;
    for (int per_factor = 4 * wanted_poles + 16; per_factor <= (1 << 22); per_factor *= 2) {
        std::vector<Singularity> pts;
        long double reach = std::numeric_limits<long double>::infinity();
        auto collect = [&](const std::vector<GammaFactor>& list, bool numerator) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                const GammaFactor& g = list[i];
                if (g.a == 0.0 || (g.a < 0.0) != right) continue;
                long double last = 0.0L;
                for (int m = 0; m < per_factor; ++m) {
                    const long double s = (-static_cast<long double>(m) - g.b) / g.a;
                    last = s;
                    if (right ? s < st.gamma_max - 1e-12L : s > st.gamma_min + 1e-12L) continue;
                    pts.push_back({s, numerator, i, m});
                }
                reach = std::min(reach, std::abs(last));
            }
        };
        collect(f.numerator(), true);
        collect(f.denominator(), false);
        std::sort(pts.begin(), pts.end(), [&](const Singularity& l, const Singularity& r) {
            return right ? l.s < r.s : l.s > r.s;
        });

        groups.clear();
        for (const auto& p : pts) {
            if (std::abs(p.s) > reach - 1.0L) break;
            if (!groups.empty() && collide(static_cast<double>(groups.back().members.front().s), static_cast<double>(p.s)))
                groups.back().members.push_back(p);
            else
                groups.push_back(Group{{p}});
        }
        int found = 0;
        for (const auto& g : groups)
            if (poles_only ? g.net() >= 1 : g.members.size() >= 2) ++found;
        const bool no_more = std::isinf(reach);
        if (found >= wanted_poles || no_more) break;
    }
    return groups;
}

std::vector<Pole> list_poles(const GammaFraction& f, Side side, int count) {
    std::vector<Pole> out;
    if (count <= 0 || f.identically_zero()) return out;
    for (const auto& g : singular_groups(f, side, count, true)) {
        if (g.net() < 1) continue;
        out.push_back({g.location(), g.net()});
        if (static_cast<int>(out.size()) == count) break;
    }
    return out;
}

long double log_factorial(int m) { return std::lgamma(m + 1.0L); }

}  // namespace

GammaFraction::GammaFraction(std::vector<GammaFactor> numerator, std::vector<GammaFactor> denominator, Strip strip,
                             double prefactor)
    : strip_(strip), prefactor_(prefactor) {
    std::vector<bool> used(denominator.size(), false);
    for (const auto& n : numerator) {
        bool cancelled = false;
        for (std::size_t j = 0; j < denominator.size(); ++j) {
            if (!used[j] && same_factor(n, denominator[j])) {
                used[j] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) num_.push_back(n);
    }
    for (std::size_t j = 0; j < denominator.size(); ++j)
        if (!used[j]) den_.push_back(denominator[j]);

    for (const auto& d : den_)
        if (d.a == 0.0 && detail::near_gamma_pole(d.b)) zero_ = true;
    for (const auto& n : num_)
        if (n.a == 0.0 && detail::near_gamma_pole(n.b)) throw DomainError("constant numerator factor sits on a Gamma pole");
    if (prefactor_ == 0.0) zero_ = true;
}

double GammaFraction::balance() const noexcept {
    double mu = 0.0;
    for (const auto& n : num_) mu += n.a;
    for (const auto& d : den_) mu -= d.a;
    return mu;
}

std::complex<double> GammaFraction::log_value(std::complex<double> s) const {
    if (zero_) return {-std::numeric_limits<double>::infinity(), 0.0};
    std::complex<double> acc = std::log(std::complex<double>(prefactor_, 0.0));
    for (const auto& n : num_) acc += log_gamma(n.a * s + n.b);
    for (const auto& d : den_) acc -= log_gamma(d.a * s + d.b);
    return acc;
}

std::complex<double> GammaFraction::value(std::complex<double> s) const {
    if (zero_) return {0.0, 0.0};
    return std::exp(log_value(s));
}

GammaFraction build_green_fraction(const FractionalTriplet& t) {
    const double a = t.alpha();
    const double b = t.beta();
    const double r = t.rho();
    if (a == b) throw UnsupportedError("alpha = beta: the neutral case has an elementary closed form");
    return GammaFraction({{1.0 / a, 0.0}, {-1.0 / a, 1.0}, {-1.0, 1.0}}, {{-b / a, 1.0}, {r, 0.0}, {-r, 1.0}},
                         Strip{0.0, std::min(a, 1.0)}, 1.0 / a);
}

std::vector<Pole> poles_right(const GammaFraction& f, int count) { return list_poles(f, Side::AtZero, count); }

std::vector<Pole> poles_left(const GammaFraction& f, int count) { return list_poles(f, Side::AtInfinity, count); }

std::vector<double> coincidences(const GammaFraction& f, Side side, int count) {
    std::vector<double> out;
    if (count <= 0) return out;
    for (const auto& g : singular_groups(f, side, count, false)) {
        if (g.members.size() < 2) continue;
        out.push_back(g.location());
        if (static_cast<int>(out.size()) == count) break;
    }
    return out;
}

double SeriesTerm::coefficient() const noexcept { return sign * static_cast<double>(std::exp(log_abs)); }

namespace {

PowerSeriesExpansion residues(const GammaFraction& f, Side side, int n_terms, bool cut) {
    PowerSeriesExpansion e;
    e.origin = side;
    const double mu = f.balance();
    const bool convergent = side == Side::AtZero ? mu < 0.0 : mu > 0.0;
    e.nature = convergent ? Nature::Convergent : Nature::Asymptotic;
    e.radius_hint = side == Side::AtZero ? 0.0 : std::numeric_limits<double>::infinity();
    if (f.identically_zero()) {
        e.exact_zero = true;
        e.radius_hint = side == Side::AtZero ? std::numeric_limits<double>::infinity() : 0.0;
        return e;
    }
    if (n_terms <= 0) return e;

    const int outer_sign = side == Side::AtZero ? -1 : 1;
    const long double log_pre = std::log(std::abs(static_cast<long double>(f.prefactor())));
    const int pre_sign = f.prefactor() < 0.0 ? -1 : 1;

    for (const auto& g : singular_groups(f, side, n_terms, true)) {
        const int net = g.net();
        if (net < 1) continue;
        if (net >= 2) {
            if (!cut) throw CollisionError(g.location());
            e.cut_at = g.location();
            break;
        }
        const long double s0 = g.members.front().s;

        long double log_abs = log_pre;
        int sign = outer_sign * pre_sign;
        std::vector<bool> num_singular(f.numerator().size(), false);
        std::vector<bool> den_singular(f.denominator().size(), false);
        for (const auto& m : g.members) {
            const auto& fac = m.numerator ? f.numerator()[m.factor] : f.denominator()[m.factor];
            const long double a = fac.a;
            if (m.numerator) {
                num_singular[m.factor] = true;
                // Gamma(-m + a (s - s0)) ~ (-1)^m / (m! a (s - s0))
                log_abs += -log_factorial(m.m) - std::log(std::abs(a));
            } else {
                den_singular[m.factor] = true;
                // 1/Gamma(-m + a (s - s0)) ~ (-1)^m m! a (s - s0)
                log_abs += log_factorial(m.m) + std::log(std::abs(a));
            }
            if (m.m % 2) sign = -sign;
            if (a < 0.0L) sign = -sign;
        }
        for (std::size_t i = 0; i < f.numerator().size(); ++i) {
            if (num_singular[i]) continue;
            const auto& fac = f.numerator()[i];
            const detail::SignedLogLD lg = detail::log_gamma_ld(fac.a * s0 + fac.b);
            log_abs += lg.log_abs;
            sign *= lg.sign;
        }
        for (std::size_t j = 0; j < f.denominator().size(); ++j) {
            if (den_singular[j]) continue;
            const auto& fac = f.denominator()[j];
            if (fac.a == 0.0) {
                const detail::SignedLogLD lg = detail::log_gamma_ld(fac.b);
                log_abs -= lg.log_abs;
                sign *= lg.sign;
                continue;
            }
            const long double arg = fac.a * s0 + fac.b;
            if (detail::near_gamma_pole(static_cast<double>(arg))) {
                sign = 0;
                break;
            }
            const detail::SignedLogLD lg = detail::log_gamma_ld(arg);
            log_abs -= lg.log_abs;
            sign *= lg.sign;
        }
        if (sign != 0) e.terms.push_back({s0 - 1.0L, log_abs, sign});
        if (static_cast<int>(e.terms.size()) == n_terms) break;
    }
    return e;
}

}  // namespace

PowerSeriesExpansion residue_series(const GammaFraction& f, Side side, int n_terms) {
    return residues(f, side, n_terms, false);
}

PowerSeriesExpansion residue_series_until_collision(const GammaFraction& f, Side side, int n_terms) {
    return residues(f, side, n_terms, true);
}

EvaluationResult evaluate_expansion(const PowerSeriesExpansion& e, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("expansions are evaluated at x > 0");
    const Method method = e.nature == Nature::Convergent ? Method::TaylorSeries : Method::AsymptoticSeries;
    if (e.exact_zero) return {0.0, 0.0, method};
    if (e.terms.empty()) {
        if (std::isinf(tol)) return {0.0, std::numeric_limits<double>::infinity(), method};
        throw AccuracyError("empty expansion", std::numeric_limits<double>::infinity());
    }

    const long double lx = std::log(static_cast<long double>(x));
    const std::size_t n = e.terms.size();
    std::vector<long double> value(n);
    std::vector<long double> mag(n);
    std::vector<long double> weight(n);
    for (std::size_t k = 0; k < n; ++k) {
        const SeriesTerm& t = e.terms[k];
        const long double l = t.log_abs + t.exponent * lx;
        mag[k] = std::exp(l);
        value[k] = t.sign * mag[k];
        weight[k] = std::abs(t.log_abs) + std::abs(t.exponent * lx) + 8.0L;
    }
    auto envelope = [&](std::size_t k) {
        long double m = 0.0L;
        for (std::size_t j = k; j < std::min(n, k + 3); ++j) m = std::max(m, mag[j]);
        return m;
    };

    std::size_t stop = n;
    long double truncation = envelope(n >= 3 ? n - 3 : 0);
    if (e.nature == Nature::Asymptotic) {
        for (std::size_t k = 0; k + 3 <= n; ++k) {
            const long double env = envelope(k);
            if (env < truncation || k == 0) {
                truncation = env;
                stop = k;
            }
        }
        if (n < 3) stop = n;
        // The remainder at optimal truncation exceeds the smallest term by
        // about sqrt(pi N / 2).
        truncation *= std::sqrt(std::numbers::pi_v<long double> * (stop + 1) / 2.0L);
    }

    if (stop == n && !std::isnan(e.cut_at)) {
        // x^{c-1} (A + B ln x) is missing; scale the last kept term to it.
        const SeriesTerm& last = e.terms.back();
        const long double shift = (e.cut_at - 1.0) - last.exponent;
        truncation = std::max(truncation, mag[n - 1] * std::exp(shift * lx) * (2.0L + std::abs(lx)));
    }

    long double sum = 0.0L;
    long double comp = 0.0L;
    long double rounding = 0.0L;
    for (std::size_t k = 0; k < stop; ++k) {
        const long double t = sum + value[k];
        comp += std::abs(sum) >= std::abs(value[k]) ? (sum - t) + value[k] : (value[k] - t) + sum;
        sum = t;
        rounding += mag[k] * eps_ld * weight[k];
    }
    const double v = static_cast<double>(sum + comp);
    const double err = static_cast<double>(truncation + rounding) + std::numeric_limits<double>::epsilon() * std::abs(v);
    if (!std::isfinite(v) || !(err <= tol))
        throw AccuracyError("series expansion does not reach tolerance at this x", std::isfinite(err) ? err : std::numeric_limits<double>::infinity());
    return {v, err, method};
}

}  // namespace fracgreen
