#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "fracgreen/evaluation.hpp"
#include "fracgreen/params.hpp"

namespace fracgreen {

/// Gamma(a s + b).
struct GammaFactor {
    double a;
    double b;
    friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// Open vertical strip gamma_min < Re s < gamma_max.
struct Strip {
    double gamma_min;
    double gamma_max;
};

/// prefactor * prod Gamma(num) / prod Gamma(den), analytic in `strip`.
/// Numerator/denominator pairs with matching (a, b) are cancelled on
/// construction.
class GammaFraction {
public:
    GammaFraction(std::vector<GammaFactor> numerator, std::vector<GammaFactor> denominator, Strip strip,
                  double prefactor = 1.0);

    const std::vector<GammaFactor>& numerator() const noexcept { return num_; }
    const std::vector<GammaFactor>& denominator() const noexcept { return den_; }
    Strip strip() const noexcept { return strip_; }
    double prefactor() const noexcept { return prefactor_; }

    /// A constant denominator factor sits on a Gamma pole, so the fraction
    /// vanishes for every s.
    bool identically_zero() const noexcept { return zero_; }

    /// Sum of numerator slopes minus denominator slopes. Controls which
    /// residue expansion converges.
    double balance() const noexcept;

    /// log of the fraction (prefactor included); real part is log|F|.
    std::complex<double> log_value(std::complex<double> s) const;
    std::complex<double> value(std::complex<double> s) const;

private:
    std::vector<GammaFactor> num_;
    std::vector<GammaFactor> den_;
    Strip strip_;
    double prefactor_;
    bool zero_ = false;
};

/// Kernel of the Mellin-Barnes representation of the reduced Green function,
/// K(x) = (1/x) (1/2 pi i) int F(s) x^s ds with the 1/alpha factor in F.
/// Throws UnsupportedError for alpha = beta.
GammaFraction build_green_fraction(const FractionalTriplet& t);

struct Pole {
    double location;
    int order;
};

/// First `count` poles to the right of the strip, ascending. Points where a
/// numerator pole is cancelled by a denominator zero are skipped; merged
/// singularities are reported with their net order.
std::vector<Pole> poles_right(const GammaFraction& f, int count);

/// First `count` poles to the left of the strip, descending.
std::vector<Pole> poles_left(const GammaFraction& f, int count);

enum class Side { AtZero, AtInfinity };
enum class Nature { Convergent, Asymptotic };

/// Singularities of individual factors that coincide (within the collision
/// tolerance) among the first `count` singular points on one side, whether
/// or not they cancel.
std::vector<double> coincidences(const GammaFraction& f, Side side, int count);

/// coefficient * x^exponent, with the coefficient stored as sign * exp(log_abs).
struct SeriesTerm {
    long double exponent;
    long double log_abs;
    int sign;
    double coefficient() const noexcept;
};

struct PowerSeriesExpansion {
    Side origin = Side::AtZero;
    std::vector<SeriesTerm> terms;
    Nature nature = Nature::Convergent;
    /// For at-zero expansions an upper bound, for at-infinity expansions a
    /// lower bound on x, inside which the expansion is trusted.
    double radius_hint = 0.0;
    /// The kernel vanishes identically; the expansion sums to exactly zero.
    bool exact_zero = false;
    /// Location of the first double pole when the series was cut there; the
    /// omitted logarithmic term enters the error estimate.
    double cut_at = std::numeric_limits<double>::quiet_NaN();
};

/// Residue expansion of the Green kernel: right poles give the expansion at
/// zero, left poles the expansion at infinity. Throws CollisionError if a
/// pole of order >= 2 occurs among the first n_terms.
PowerSeriesExpansion residue_series(const GammaFraction& f, Side side, int n_terms);

/// As residue_series, but stops in front of the first pole of order >= 2
/// instead of throwing.
PowerSeriesExpansion residue_series_until_collision(const GammaFraction& f, Side side, int n_terms);

/// Sums the expansion at x > 0. Asymptotic expansions are cut at their
/// smallest term. Throws AccuracyError when the estimate exceeds `tol`.
EvaluationResult evaluate_expansion(const PowerSeriesExpansion& e, double x,
                                    double tol = std::numeric_limits<double>::infinity());

}  // namespace fracgreen
