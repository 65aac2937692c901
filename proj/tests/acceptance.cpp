// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fracgreen/densities.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/oracles.hpp"
#include "fracgreen/table.hpp"
#include "fracgreen/verify.hpp"

using namespace fracgreen;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome from_suite(const SuiteReport& r) {
    std::size_t failed = 0;
    std::string first;
    for (const auto& c : r.checks)
        if (!c.passed) {
            if (failed++ == 0) first = c.name + " deviation=" + format_real(c.deviation, 3) + (c.note.empty() ? "" : " (" + c.note + ")");
        }
    std::string d = std::to_string(r.checks.size()) + " checks, max deviation " + format_real(r.max_deviation(), 3);
    if (failed) d += ", " + std::to_string(failed) + " failed, first: " + first;
    return {failed == 0, d};
}

Outcome gaussian() {
    const FractionalTriplet g = validate(2.0, 1.0, 0.0);
    double closed = 0.0;
    double oracle = 0.0;
    for (double t : {1.0, 4.0})
        for (double x : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const double expect = std::pow(t, -0.5) * std::exp(-x * x / (4.0 * t)) / (2.0 * std::sqrt(pi));
            closed = std::max(closed, std::abs(green(g, x, t).value - expect));
            const double s = std::sqrt(t);
            oracle = std::max(oracle, std::abs(fourier_oracle(g, x / s, 1e-10).value / s - expect));
        }
    return {closed <= 1e-12 && oracle <= 1e-8,
            "closed-form deviation " + format_real(closed, 3) + " (tol 1e-12), fourier deviation " + format_real(oracle, 3) + " (tol 1e-8)"};
}

Outcome cauchy() {
    double closed = 0.0;
    double oracle = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double x = 0.05 * i;
        const double expect = 1.0 / (pi * (1.0 + x * x));
        closed = std::max(closed, std::abs(neutral_density(1.0, 0.0, x).value - expect));
        if (i % 10 == 0) oracle = std::max(oracle, std::abs(fourier_oracle(validate(1.0, 1.0, 0.0), x, 1e-10).value - expect));
    }
    return {closed <= 1e-14 && oracle <= 1e-8,
            "closed-form deviation " + format_real(closed, 3) + " (tol 1e-14), fourier deviation " + format_real(oracle, 3) + " (tol 1e-8)"};
}

Outcome non_negativity() {
    const std::vector<FractionalTriplet> triplets{
        validate(0.5, 0.8, 0.25), validate(0.7, 1.0, -0.3), validate(1.2, 0.7, 0.3), validate(1.5, 0.8, 0.2),
        validate(1.8, 0.9, 0.1),  validate(1.5, 1.2, 0.0),  validate(1.8, 1.5, 0.1), validate(2.0, 1.6, 0.0),
        validate(1.6, 1.6, 0.2),
    };
    double lowest = std::numeric_limits<double>::infinity();
    std::string where;
    for (const auto& t : triplets)
        for (int i = 0; i < 200; ++i) {
            const double x = -15.0 + 30.0 * (i + 0.5) / 200.0;
            const double v = reduced_green(t, x, 1e-12).value;
            if (v < lowest) {
                lowest = v;
                where = "(" + format_real(t.alpha(), 3) + "," + format_real(t.beta(), 3) + "," + format_real(t.theta(), 3) +
                        ") x=" + format_real(x, 4);
            }
        }
    return {lowest >= -1e-12, std::to_string(triplets.size()) + " triplets x 200 points, minimum " + format_real(lowest, 3) + " at " + where};
}

struct Criterion {
    int id;
    std::string title;
    double budget;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Gaussian reproduction", 1.0, gaussian},
        {2, "Cauchy/neutral reproduction", 5.0, cauchy},
        {3, "normalization and half-line mass", 120.0, [] { return from_suite(run_suite("normalization")); }},
        {4, "symmetry relation", 1.0, [] { return from_suite(run_suite("symmetry")); }},
        {5, "subordination identity", 60.0, [] { return from_suite(run_suite("subordination")); }},
        {6, "moments", 60.0, [] { return from_suite(run_suite("moments")); }},
        {7, "series vs Mellin-Barnes oracle", 120.0, [] { return from_suite(run_suite("series-vs-oracle")); }},
        {8, "tail exponent", 60.0, [] { return from_suite(run_suite("tails")); }},
        {9, "non-negativity", 120.0, non_negativity},
        {10, "contour invariance", 30.0, [] { return from_suite(run_suite("contour")); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget;
        const bool ok = o.passed && in_time;
        if (!ok) ++failed;
        std::printf("[%s] criterion %d %s: %s; runtime %.2f s (budget %g s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    o.detail.c_str(), seconds, c.budget, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("acceptance: %d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
