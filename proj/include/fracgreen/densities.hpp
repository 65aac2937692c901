#pragma once

#include "fracgreen/evaluation.hpp"

namespace fracgreen {

/// Strictly stable density L_alpha^theta(x), i.e. K for beta = 1.
EvaluationResult stable_density(double alpha, double theta, double x, double tol = 1e-8);

/// Wright-type density M_{beta/2}(|x|) / 2, 0 < beta < 2.
EvaluationResult time_fractional_density(double beta, double x);

/// Elementary closed form N_alpha^theta(x) of the alpha = beta case.
/// Negative x is mapped through the symmetry K^theta(-x) = K^{-theta}(x).
EvaluationResult neutral_density(double alpha, double theta, double x);

}  // namespace fracgreen
