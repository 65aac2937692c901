#include "fracgreen/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracgreen/errors.hpp"

namespace fracgreen {

namespace {

// Boundary values are admissible; allow a couple of ulps so that inputs such
// as theta = 2 - alpha survive the subtraction.
bool within(double value, double bound) {
    return value <= bound + 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, bound);
}

[[noreturn]] void reject(const std::string& constraint, double alpha, double beta, double theta) {
    std::ostringstream os;
    os << "inadmissible triplet (alpha=" << alpha << ", beta=" << beta << ", theta=" << theta
       << "): violates " << constraint;
    throw DomainError(os.str());
}

}  // namespace

FractionalTriplet::FractionalTriplet(double a, double b, double t)
    : alpha_(a), beta_(b), theta_(t), rho_((a - t) / (2.0 * a)) {
    if (t == 0.0) rho_ = 0.5;
}

FractionalTriplet FractionalTriplet::mirrored() const noexcept {
    return FractionalTriplet(alpha_, beta_, -theta_);
}

bool FractionalTriplet::probabilistic() const noexcept {
    return beta_ <= 1.0 || beta_ <= alpha_;
}

FractionalTriplet validate(double alpha, double beta, double theta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(theta))
        reject("finiteness of alpha, beta, theta", alpha, beta, theta);
    if (!(alpha > 0.0) || !within(alpha, 2.0)) reject("0 < alpha <= 2", alpha, beta, theta);
    if (!(beta > 0.0) || !within(beta, 2.0)) reject("0 < beta <= 2", alpha, beta, theta);
    const double bound = std::min(alpha, 2.0 - alpha);
    if (!within(std::abs(theta), bound))
        reject("|theta| <= min(alpha, 2 - alpha)", alpha, beta, theta);
    return FractionalTriplet(std::min(alpha, 2.0), std::min(beta, 2.0), theta);
}

std::string_view to_string(DiffusionClass c) noexcept {
    switch (c) {
        case DiffusionClass::StandardGaussian: return "standard-gaussian";
        case DiffusionClass::SpaceFractional: return "space-fractional";
        case DiffusionClass::TimeFractional: return "time-fractional";
        case DiffusionClass::Neutral: return "neutral";
        case DiffusionClass::Wave: return "wave";
        case DiffusionClass::GeneralSpaceTime: return "general-space-time";
    }
    return "unknown";
}

DiffusionClass classify(const FractionalTriplet& t) noexcept {
    const double a = t.alpha();
    const double b = t.beta();
    if (a == 2.0 && b == 2.0) return DiffusionClass::Wave;
    if (a == 2.0 && b == 1.0) return DiffusionClass::StandardGaussian;
    if (a == b) return DiffusionClass::Neutral;
    if (b == 1.0) return DiffusionClass::SpaceFractional;
    if (a == 2.0 && b < 1.0) return DiffusionClass::TimeFractional;
    return DiffusionClass::GeneralSpaceTime;
}

std::complex<double> symbol_psi(const FractionalTriplet& t, double kappa) noexcept {
    if (kappa == 0.0) return {0.0, 0.0};
    const double magnitude = std::pow(std::abs(kappa), t.alpha());
    const double phase = std::copysign(1.0, kappa) * t.theta() * std::numbers::pi / 2.0;
    if (t.theta() == 0.0) return {magnitude, 0.0};
    return std::polar(magnitude, phase);
}

}  // namespace fracgreen
