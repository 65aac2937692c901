#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fracgreen/densities.hpp"
#include "fracgreen/detail/quadrature.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

// Smallest v with M_nu(w) below `floor` for all w >= v.
double wright_cutoff(double nu, double floor) {
    double v = 1.0;
    while (v < 1e6 && wright_m(nu, v).value > floor) v *= 1.5;
    return v;
}

bool cheap_stable(const FractionalTriplet& t) { return t.alpha() == 2.0 || t.alpha() == 1.0; }

}  // namespace

EvaluationResult subordination_integral(const FractionalTriplet& t, double x, double tol, SubordinationBranch branch) {
    const double a = t.alpha();
    const double b = t.beta();
    const bool stable_ok = b < 1.0;
    const bool neutral_ok = b < a;
    if (branch == SubordinationBranch::Automatic) {
        if (stable_ok && cheap_stable(t))
            branch = SubordinationBranch::Stable;
        else if (neutral_ok)
            branch = SubordinationBranch::Neutral;
        else if (stable_ok)
            branch = SubordinationBranch::Stable;
        else
            throw DomainError("subordination needs 0 < beta < 1 or 0 < beta/alpha < 1");
    }
    if (branch == SubordinationBranch::Stable && !stable_ok)
        throw DomainError("the stable subordination branch needs 0 < beta < 1");
    if (branch == SubordinationBranch::Neutral && !neutral_ok)
        throw DomainError("the neutral subordination branch needs 0 < beta/alpha < 1");
    if (x < 0.0) return subordination_integral(t.mirrored(), -x, tol, branch);
    // At x = 0 the neutral-branch mass collapses onto xi -> 0.
    if (x == 0.0 && branch == SubordinationBranch::Neutral)
        throw DomainError("the neutral subordination branch is not evaluated at x = 0");

    const bool stable = branch == SubordinationBranch::Stable;
    const double nu = stable ? b : b / a;
    const double inner_tol = std::max(1e-15, 0.05 * tol);
    double inner_error = 0.0;

    // dxi/xi = du with xi = e^u.
    auto integrand = [&](double u) {
        const double xi = std::exp(u);
        double weight;
        EvaluationResult inner;
        if (stable) {
            const double v = std::pow(xi, a);
            weight = a * v * wright_m(nu, v).value / xi;
            inner = stable_density(a, t.theta(), x / xi, inner_tol);
        } else {
            weight = wright_m(nu, xi).value;
            inner = neutral_density(a, t.theta(), x / xi);
        }
        inner_error = std::max(inner_error, inner.abs_error);
        return weight * inner.value;
    };

    // Upper end: the directing density is negligible.
    const double v_hi = wright_cutoff(nu, 1e-30);
    const double u_hi = stable ? std::log(v_hi) / a : std::log(v_hi);

    // Lower end: the integrand decays geometrically as u -> -inf once x/xi is
    // in the tail of the inner density. Walk down until it is negligible.
    const double floor = 1e-4 * tol;
    double u_lo = std::min(u_hi - 1.0, (x > 0.0 ? std::log(x) : 0.0) - 2.0);
    int steps = 0;
    double last = std::abs(integrand(u_lo));
    for (; steps < 400; ++steps) {
        const double next = std::abs(integrand(u_lo - 1.0));
        u_lo -= 1.0;
        if (next < floor && next <= last) break;
        last = next;
    }
    if (steps == 400) throw AccuracyError("subordination integral does not converge at the lower end", std::numeric_limits<double>::infinity());

    std::vector<double> breaks;
    for (double u = u_lo; u < u_hi; u += 1.0) breaks.push_back(u);
    breaks.push_back(u_hi);
    if (x > 0.0)
        for (double d : {-1.0, 0.0, 1.0}) {
            const double c = std::log(x) + d;
            if (c > u_lo && c < u_hi) breaks.push_back(c);
        }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const auto q = detail::integrate(integrand, breaks, 0.5 * tol, 0.0, static_cast<int>(breaks.size()) + 600);
    const double tail = floor * 2.0;
    const double error = q.error + tail + inner_error * 1.0;
    if (!q.converged || !(error <= tol)) throw AccuracyError("subordination quadrature did not reach tolerance", error);
    return {q.value, error, Method::Subordination};
}

}  // namespace fracgreen
