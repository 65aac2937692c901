#pragma once

#include <complex>

#include "fracgreen/evaluation.hpp"

namespace fracgreen {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLog {
    double log_abs;
    int sign;
};

/// Throws PoleError at x = 0, -1, -2, ...
SignedLog log_gamma(double x);

/// Principal-branch-insensitive log Gamma(z): exp() of the result is Gamma(z),
/// the imaginary part is only defined modulo 2 pi. Throws PoleError at poles.
std::complex<double> log_gamma(std::complex<double> z);

/// 1 / Gamma(x), exactly zero at the poles of Gamma.
double reciprocal_gamma(double x) noexcept;

/// E_beta(x) = sum x^n / Gamma(beta n + 1) on the nonpositive real axis.
EvaluationResult mittag_leffler(double beta, double x, double tol = 1e-13);

struct ComplexEvaluation {
    std::complex<double> value;
    double abs_error = 0.0;
    Method method = Method::ClosedForm;
    bool reduced_confidence = false;
};

/// E_beta(z) for Re z <= 0. Throws AccuracyError when the achieved error
/// estimate exceeds `tol`.
ComplexEvaluation mittag_leffler_complex(double beta, std::complex<double> z, double tol = 1e-12);

/// Wright-type function M_nu(x) = sum (-x)^n / (n! Gamma(1 - nu - nu n)),
/// 0 < nu < 1, x >= 0.
EvaluationResult wright_m(double nu, double x);

}  // namespace fracgreen
