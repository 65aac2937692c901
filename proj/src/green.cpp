#include "fracgreen/green.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "fracgreen/densities.hpp"
#include "fracgreen/detail/expansion_cache.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/oracles.hpp"

namespace fracgreen {

namespace {

bool subordination_applies(const FractionalTriplet& t) { return t.beta() < 1.0 || t.beta() < t.alpha(); }

EvaluationResult general(const FractionalTriplet& t, double x, double tol) {
    // alpha = 2 forces theta = 0; the kernel is the Wright-type one for any beta.
    if (t.alpha() == 2.0) return time_fractional_density(t.beta(), x);
    if (t.rho() == 0.0 && x > 0.0) return {0.0, 0.0, Method::ClosedForm};

    double achieved = std::numeric_limits<double>::infinity();
    if (x == 0.0) {
        try {
            return detail::kernel_at_origin(t);
        } catch (const AccuracyError& e) {
            achieved = e.achieved();
        }
        if (subordination_applies(t)) return subordination_integral(t, 0.0, tol);
        throw AccuracyError("no method evaluates K at x = 0 for these parameters", achieved);
    }
    try {
        return detail::series_kernel(t, x, tol);
    } catch (const AccuracyError& e) {
        achieved = std::min(achieved, e.achieved());
    }
    auto contour = [&]() -> std::optional<EvaluationResult> {
        try {
            return mellin_oracle(t, x, default_contour(t), tol);
        } catch (const AccuracyError& e) {
            achieved = std::min(achieved, e.achieved());
        }
        return std::nullopt;
    };
    // Past a pole collision the series stops short; contour quadrature
    // covers the gap.
    const bool collided = detail::calibrated_expansions(t)->collided();
    if (collided)
        if (auto r = contour()) return *r;
    if (subordination_applies(t)) {
        try {
            return subordination_integral(t, x, tol);
        } catch (const AccuracyError& e) {
            achieved = std::min(achieved, e.achieved());
        }
    }
    if (!collided)
        if (auto r = contour()) return *r;
    throw AccuracyError("no evaluation method reached the requested tolerance", achieved);
}

}  // namespace

EvaluationResult reduced_green(const FractionalTriplet& t, double x, double tol) {
    if (!std::isfinite(x)) throw DomainError("x must be finite");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const DiffusionClass c = classify(t);
    if (c == DiffusionClass::Wave) throw WaveCaseError();
    if (x < 0.0) return reduced_green(t.mirrored(), -x, tol);

    EvaluationResult r;
    switch (c) {
        case DiffusionClass::StandardGaussian:
        case DiffusionClass::SpaceFractional:
            r = stable_density(t.alpha(), t.theta(), x, tol);
            break;
        case DiffusionClass::TimeFractional:
            r = time_fractional_density(t.beta(), x);
            break;
        case DiffusionClass::Neutral:
            r = neutral_density(t.alpha(), t.theta(), x);
            break;
        default:
            r = general(t, x, tol);
            break;
    }
    if (t.beta() > 1.0) r.reduced_confidence = r.reduced_confidence || r.method == Method::Quadrature;
    r.non_probabilistic = !t.probabilistic();
    return r;
}

EvaluationResult green(const FractionalTriplet& t, double x, double time, double tol) {
    if (!(time > 0.0) || !std::isfinite(time)) throw DomainError("time must be positive and finite");
    const double scale = std::pow(time, t.beta() / t.alpha());
    if (classify(t) == DiffusionClass::Wave) throw WaveCaseError();
    EvaluationResult r = reduced_green(t, x / scale, tol * scale);
    r.value /= scale;
    r.abs_error /= scale;
    return r;
}

EvaluationResult evaluate(const GreenRequest& request) {
    if (!(request.tolerance >= 1e-14 && request.tolerance <= 1e-2))
        throw DomainError("tolerance must lie in [1e-14, 1e-2]");
    return green(request.triplet, request.x, request.t, request.tolerance);
}

}  // namespace fracgreen
