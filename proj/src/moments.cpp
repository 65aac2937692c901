#include <cmath>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

double gamma_of(double x) {
    const SignedLog g = log_gamma(x);
    return g.sign * std::exp(g.log_abs);
}

}  // namespace

double moment(const FractionalTriplet& t, double delta) {
    const double a = t.alpha();
    const double b = t.beta();
    if (!std::isfinite(delta)) throw DomainError("moment order must be finite");
    if (a == 2.0 && t.theta() == 0.0) {
        if (!(delta > -1.0)) throw DomainError("moment order must satisfy delta > -1 for alpha = 2");
        // Cancelling the Gamma pairs leaves Gamma(1 + delta) / Gamma(1 + beta delta / 2).
        return 0.5 * std::exp(log_gamma(1.0 + delta).log_abs) * reciprocal_gamma(1.0 + b * delta / 2.0);
    }
    if (!(delta > -std::min(a, 1.0) && delta < a))
        throw DomainError("moment order must satisfy -min(alpha, 1) < delta < alpha");
    const double r = t.rho();
    if (r == 0.0) return 0.0;
    const double num = gamma_of(1.0 - delta / a) * gamma_of(1.0 + delta / a) * gamma_of(1.0 + delta);
    return r * num * reciprocal_gamma(1.0 - r * delta) * reciprocal_gamma(1.0 + r * delta) * reciprocal_gamma(1.0 + b * delta / a);
}

}  // namespace fracgreen
