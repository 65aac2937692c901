#pragma once

#include "fracgreen/evaluation.hpp"
#include "fracgreen/params.hpp"

namespace fracgreen {

/// K(x) from the inverse Fourier transform of E_beta(-psi(kappa)). Slow but
/// independent of the series machinery. Beta > 1 results carry
/// reduced_confidence.
EvaluationResult fourier_oracle(const FractionalTriplet& t, double x, double tol = 1e-10);

/// K(x), x > 0, by quadrature of the Mellin-Barnes integral along
/// Re s = gamma, which must lie strictly inside the kernel's strip.
/// Throws UnsupportedError for alpha = beta.
EvaluationResult mellin_oracle(const FractionalTriplet& t, double x, double gamma, double tol = 1e-10);

/// Centre of the strip 0 < gamma < min(alpha, 1).
double default_contour(const FractionalTriplet& t) noexcept;

/// Brute-force half-line moment int_0^inf x^delta K(x) dx.
EvaluationResult quadrature_moment(const FractionalTriplet& t, double delta, double tol = 1e-9);

}  // namespace fracgreen
