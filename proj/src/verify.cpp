#include "fracgreen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include "fracgreen/densities.hpp"
#include "fracgreen/detail/expansion_cache.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mb_engine.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/specials.hpp"
#include "fracgreen/table.hpp"

namespace fracgreen {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::string label(const FractionalTriplet& t) {
    return "(" + format_real(t.alpha(), 6) + "," + format_real(t.beta(), 6) + "," + format_real(t.theta(), 6) + ")";
}

std::string real6(double v) { return format_real(v, 6); }

CheckResult check(std::string name, double tolerance, const std::function<double()>& deviation) {
    try {
        const double d = deviation();
        return {std::move(name), d, tolerance, d <= tolerance, ""};
    } catch (const std::exception& e) {
        return {std::move(name), inf, tolerance, false, e.what()};
    }
}

std::vector<FractionalTriplet> normalization_grid() {
    std::vector<FractionalTriplet> out;
    for (double a : {0.5, 1.0, 1.5, 2.0})
        for (double b : {0.5, 0.8, 1.0}) {
            const double h = 0.5 * std::min(a, 2.0 - a);
            std::vector<double> thetas{0.0};
            if (h > 0.0) thetas.insert(thetas.end(), {h, -h});
            for (double th : thetas) out.push_back(validate(a, b, th));
        }
    return out;
}

void normalization(SuiteReport& r) {
    for (const auto& t : normalization_grid()) {
        double right = std::numeric_limits<double>::quiet_NaN();
        r.checks.push_back(check("normalization " + label(t) + " half-line mass", 1e-6, [&] {
            right = quadrature_moment(t, 0.0, 1e-8).value;
            return std::abs(right - t.rho());
        }));
        r.checks.push_back(check("normalization " + label(t) + " total mass", 1e-6, [&] {
            const double left = quadrature_moment(t.mirrored(), 0.0, 1e-8).value;
            return std::abs(right + left - 1.0);
        }));
    }
}

// Triplets in the probabilistic ranges {0 < beta <= 1} and {1 < beta <= alpha}.
FractionalTriplet random_probabilistic(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const double a = 0.2 + 1.8 * u(rng);
        const double b = 0.1 + (std::min(a, 1.9) - 0.1) * u(rng);
        const double h = std::min(a, 2.0 - a);
        const double th = (2.0 * u(rng) - 1.0) * 0.9 * h;
        const FractionalTriplet t = validate(a, b, th);
        if (t.probabilistic()) return t;
    }
}

void symmetry(SuiteReport& r) {
    std::mt19937_64 rng(20231014);
    std::uniform_real_distribution<double> ux(0.05, 10.0);
    double worst = 0.0;
    r.checks.push_back(check("symmetry K(-x) = K^{-theta}(x) over 50 random points", 1e-12, [&] {
        for (int i = 0; i < 50; ++i) {
            const FractionalTriplet t = random_probabilistic(rng);
            const double x = ux(rng);
            const double d = std::abs(reduced_green(t, -x).value - reduced_green(t.mirrored(), x).value);
            worst = std::max(worst, d);
        }
        return worst;
    }));
}

void subordination(SuiteReport& r) {
    for (double b : {0.5, 0.8}) {
        const FractionalTriplet t = validate(2.0, b, 0.0);
        for (double x : {0.25, 1.0, 3.0})
            r.checks.push_back(check("subordination stable branch " + label(t) + " x=" + real6(x), 1e-6, [&] {
                const double s = subordination_integral(t, x, 1e-9, SubordinationBranch::Stable).value;
                return std::abs(s - time_fractional_density(b, x).value);
            }));
    }
    for (const auto& t : {validate(1.5, 1.2, 0.0), validate(1.8, 1.5, 0.1)})
        for (double x : {0.25, 1.0, 3.0})
            r.checks.push_back(check("subordination neutral branch " + label(t) + " x=" + real6(x), 1e-5, [&] {
                const double s = subordination_integral(t, x, 1e-9, SubordinationBranch::Neutral).value;
                return std::abs(s - mellin_oracle(t, x, default_contour(t), 1e-10).value);
            }));
}

void moments(SuiteReport& r) {
    auto versus_quadrature = [&](const FractionalTriplet& t, double delta) {
        r.checks.push_back(check("moment " + label(t) + " delta=" + real6(delta) + " closed vs quadrature", 1e-5, [&] {
            return std::abs(moment(t, delta) - quadrature_moment(t, delta, 1e-8).value);
        }));
    };
    const FractionalTriplet gauss = validate(2.0, 1.0, 0.0);
    for (double d : {1.0, 2.0, 3.0}) versus_quadrature(gauss, d);
    const FractionalTriplet tf = validate(2.0, 0.5, 0.0);
    versus_quadrature(tf, 2.0);
    r.checks.push_back(check("moment " + label(tf) + " delta=2 equals 1/Gamma(1.5)", 1e-7,
                             [&] { return std::abs(moment(tf, 2.0) - 1.1283791670955126); }));
    const FractionalTriplet st = validate(1.5, 1.0, 0.0);
    for (double d : {0.25, 0.9}) versus_quadrature(st, d);
    for (const auto& t : {gauss, tf, st, validate(1.2, 0.7, 0.3), validate(0.8, 1.0, -0.4), validate(0.5, 0.8, 0.25),
                          validate(1.5, 1.2, 0.2)})
        r.checks.push_back(check("moment " + label(t) + " delta=0 equals rho", 1e-6,
                                 [&] { return std::abs(quadrature_moment(t, 0.0, 1e-8).value - t.rho()); }));
}

void tails(SuiteReport& r) {
    for (double a : {0.8, 1.2, 1.6})
        for (double b : {0.7, 1.0}) {
            const FractionalTriplet t = validate(a, b, 0.0);
            r.checks.push_back(check("tail slope " + label(t) + " on [10, 100] vs -(alpha+1)", 0.05, [&] {
                // Least-squares slope of log K against log x.
                constexpr int n = 11;
                double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double lx = std::log(10.0) * (1.0 + static_cast<double>(i) / (n - 1));
                    const double ly = std::log(reduced_green(t, std::exp(lx), 1e-12).value);
                    sx += lx;
                    sy += ly;
                    sxx += lx * lx;
                    sxy += lx * ly;
                }
                const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
                return std::abs(slope + a + 1.0);
            }));
        }
}

// Admissible triplets away from alpha = beta whose residue series have no
// pole collision among their first 200 terms.
FractionalTriplet random_collision_free(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const double a = 0.3 + 1.65 * u(rng);
        const double b = 0.3 + (std::min(a, 1.0) - 0.3) * u(rng);
        if (std::abs(a - b) < 0.05) continue;
        const double th = (2.0 * u(rng) - 1.0) * 0.9 * std::min(a, 2.0 - a);
        const FractionalTriplet t = validate(a, b, th);
        const GammaFraction f = build_green_fraction(t);
        try {
            (void)residue_series(f, Side::AtZero, 200);
            (void)residue_series(f, Side::AtInfinity, 200);
        } catch (const CollisionError&) {
            continue;
        }
        return t;
    }
}

void series_vs_oracle(SuiteReport& r) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const FractionalTriplet t = random_collision_free(rng);
        r.checks.push_back(check("series vs mellin " + label(t) + " deviation / combined estimate", 1.0, [&] {
            const auto cal = detail::calibrated_expansions(t);
            std::vector<std::pair<const PowerSeriesExpansion*, double>> points;
            if (cal->at_zero && cal->at_zero->radius_hint > 0.0 && std::isfinite(cal->at_zero->radius_hint))
                for (int k = 0; k < 5; ++k) points.emplace_back(&*cal->at_zero, cal->at_zero->radius_hint * std::pow(10.0, -0.5 * k));
            if (cal->at_infinity && std::isfinite(cal->at_infinity->radius_hint) && cal->at_infinity->radius_hint > 0.0)
                for (int k = 0; k < 5; ++k)
                    points.emplace_back(&*cal->at_infinity, cal->at_infinity->radius_hint * std::pow(10.0, 0.5 * k));
            if (points.empty()) throw AccuracyError("neither expansion has a validity range", inf);
            double worst = 0.0;
            for (const auto& [e, x] : points) {
                const EvaluationResult s = evaluate_expansion(*e, x);
                const EvaluationResult o = mellin_oracle(t, x, default_contour(t), 1e-12);
                const double combined = s.abs_error + o.abs_error + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(o.value);
                worst = std::max(worst, std::abs(s.value - o.value) / combined);
            }
            return worst;
        }));
    }
}

void contour(SuiteReport& r) {
    for (const auto& t : {validate(1.5, 0.8, 0.2), validate(0.7, 0.5, 0.3), validate(1.2, 1.0, -0.5),
                          validate(1.8, 0.9, 0.1), validate(0.9, 0.6, -0.2)}) {
        const double top = std::min(t.alpha(), 1.0);
        for (double x : {0.5, 2.0})
            r.checks.push_back(check("contour invariance " + label(t) + " x=" + real6(x), 1e-8, [&] {
                return std::abs(mellin_oracle(t, x, 0.3 * top, 1e-10).value - mellin_oracle(t, x, 0.7 * top, 1e-10).value);
            }));
    }
}

void fourier(SuiteReport& r) {
    for (const auto& [t, x] : std::vector<std::pair<FractionalTriplet, double>>{
             {validate(2.0, 1.0, 0.0), 1.0}, {validate(1.5, 0.8, 0.2), 0.5}, {validate(0.8, 0.6, 0.3), 1.5}})
        r.checks.push_back(check("fourier vs green " + label(t) + " x=" + real6(x), 1e-8, [&] {
            return std::abs(fourier_oracle(t, x, 1e-10).value - reduced_green(t, x, 1e-12).value);
        }));
}

}  // namespace

bool SuiteReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteReport::max_deviation() const noexcept {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"normalization", "symmetry", "subordination", "moments", "tails", "oracles"};
    return names;
}

SuiteReport run_suite(std::string_view name) {
    SuiteReport r;
    r.suite = std::string(name);
    const auto start = std::chrono::steady_clock::now();
    if (name == "normalization")
        normalization(r);
    else if (name == "symmetry")
        symmetry(r);
    else if (name == "subordination")
        subordination(r);
    else if (name == "moments")
        moments(r);
    else if (name == "tails")
        tails(r);
    else if (name == "oracles") {
        series_vs_oracle(r);
        contour(r);
        fourier(r);
    } else if (name == "series-vs-oracle")
        series_vs_oracle(r);
    else if (name == "contour")
        contour(r);
    else
        throw DomainError("unknown suite '" + std::string(name) + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void write_report(std::ostream& out, const SuiteReport& report) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        if (!c.passed) ++failed;
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " deviation=" << format_real(c.deviation, 7)
            << " tolerance=" << format_real(c.tolerance, 7);
        if (!c.note.empty()) out << " note=\"" << c.note << '"';
        out << '\n';
    }
    out << "summary suite=" << report.suite << " checks=" << report.checks.size() << " failed=" << failed
        << " seconds=" << format_real(report.seconds, 4) << " status=" << (failed ? "fail" : "pass") << '\n';
}

}  // namespace fracgreen
