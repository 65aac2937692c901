#pragma once

#include <complex>
#include <string_view>

namespace fracgreen {

/// Validated (alpha, beta, theta) triplet of the space-time fractional
/// diffusion equation.
///
/// Constraints: 0 < alpha <= 2, 0 < beta <= 2 and
/// |theta| <= min(alpha, 2 - alpha). Only `validate` constructs instances, so
/// every FractionalTriplet in the program is admissible.
class FractionalTriplet {
public:
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double theta() const noexcept { return theta_; }
    /// Skewness index (alpha - theta) / (2 alpha): the mass on x > 0.
    double rho() const noexcept { return rho_; }

    /// Same alpha and beta with theta negated; K^theta(-x) = K^{-theta}(x).
    FractionalTriplet mirrored() const noexcept;

    /// True in {0 < beta <= 1} and {1 < beta <= alpha <= 2}.
    bool probabilistic() const noexcept;

    friend bool operator==(const FractionalTriplet&, const FractionalTriplet&) = default;

    friend FractionalTriplet validate(double alpha, double beta, double theta);

private:
    FractionalTriplet(double a, double b, double t);

    double alpha_;
    double beta_;
    double theta_;
    double rho_;
};

/// Checks the admissible domain and builds the triplet. Throws DomainError
/// naming the violated constraint.
FractionalTriplet validate(double alpha, double beta, double theta);

enum class DiffusionClass {
    StandardGaussian,
    SpaceFractional,
    TimeFractional,
    Neutral,
    Wave,
    GeneralSpaceTime,
};

std::string_view to_string(DiffusionClass c) noexcept;

DiffusionClass classify(const FractionalTriplet& t) noexcept;

/// Fourier symbol |kappa|^alpha exp(i sign(kappa) theta pi / 2) of the
/// Riesz-Feller operator (the operator itself is minus this symbol).
std::complex<double> symbol_psi(const FractionalTriplet& t, double kappa) noexcept;

}  // namespace fracgreen
