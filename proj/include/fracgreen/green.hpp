#pragma once

#include "fracgreen/evaluation.hpp"
#include "fracgreen/params.hpp"

namespace fracgreen {

/// Reduced Green function K(x) = G(x, 1). Throws WaveCaseError for
/// alpha = beta = 2 and AccuracyError if no method reaches `tol`.
EvaluationResult reduced_green(const FractionalTriplet& t, double x, double tol = 1e-8);

/// G(x, time) = time^{-beta/alpha} K(x / time^{beta/alpha}).
EvaluationResult green(const FractionalTriplet& t, double x, double time, double tol = 1e-8);

struct GreenRequest {
    FractionalTriplet triplet;
    double x = 0.0;
    double t = 1.0;
    double tolerance = 1e-8;
};

/// Checks t > 0 and 1e-14 <= tolerance <= 1e-2, then evaluates green().
EvaluationResult evaluate(const GreenRequest& request);

enum class SubordinationBranch {
    Automatic,
    /// alpha int xi^{alpha-1} M_beta(xi^alpha) L(x/xi) dxi/xi, 0 < beta < 1.
    Stable,
    /// int M_{beta/alpha}(xi) N(x/xi) dxi/xi, 0 < beta/alpha < 1.
    Neutral,
};

/// K(x) as a mixture of stable or neutral densities over a Wright-type
/// directing density. x = 0 is only accepted on the stable branch.
EvaluationResult subordination_integral(const FractionalTriplet& t, double x, double tol = 1e-8,
                                        SubordinationBranch branch = SubordinationBranch::Automatic);

/// Half-line fractional moment int_0^inf x^delta K(x) dx in closed form.
/// Requires -min(alpha, 1) < delta < alpha, or delta > -1 when alpha = 2.
double moment(const FractionalTriplet& t, double delta);

}  // namespace fracgreen
