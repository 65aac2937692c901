#include <cmath>
#include <complex>
#include <numbers>

#include "fracgreen/detail/long_gamma.hpp"
#include "fracgreen/errors.hpp"
#include "fracgreen/specials.hpp"

namespace fracgreen {

namespace {

using cd = std::complex<double>;

bool is_pole(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

// Reentrant variants avoid the global signgam of std::lgamma.
double lgamma_signed(double x, int& sign) noexcept {
#if defined(__GLIBC__)
    return ::lgamma_r(x, &sign);
#else
    const double v = std::lgamma(x);
    sign = (x > 0.0 || static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
    return v;
#endif
}

// log sin(pi z) without overflow for large |Im z|; only exp() of the
// result is meaningful.
cd log_sin_pi(cd z) {
    const cd w = std::numbers::pi * z;
    const cd i{0.0, 1.0};
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    if (w.imag() > 0.0) return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(cd{0.0, 0.5});
    return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(cd{0.0, 2.0});
}

cd stirling(cd z) {
    static constexpr double c[] = {1.0 / 12.0,          -1.0 / 360.0, 1.0 / 1260.0,  -1.0 / 1680.0,
                                   1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};
    const cd inv = 1.0 / z;
    const cd inv2 = inv * inv;
    cd series = c[7];
    for (int k = 6; k >= 0; --k) series = series * inv2 + c[k];
    series *= inv;
    const double half_log_two_pi = 0.91893853320467274178032973640562;
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

}  // namespace

SignedLog log_gamma(double x) {
    if (is_pole(x)) throw PoleError(x);
    int sign = 1;
    const double v = lgamma_signed(x, sign);
    return {v, sign};
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0) {
        if (is_pole(z.real())) throw PoleError(z.real());
        const SignedLog r = log_gamma(z.real());
        return {r.log_abs, r.sign > 0 ? 0.0 : std::numbers::pi};
    }
    if (z.real() < 0.5) return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma(1.0 - z);

    // Shift into the Stirling region; the product stays far from overflow.
    cd product{1.0, 0.0};
    while (std::abs(z) < 15.0) {
        product *= z;
        z += 1.0;
    }
    return stirling(z) - std::log(product);
}

double reciprocal_gamma(double x) noexcept {
    if (is_pole(x)) return 0.0;
    int sign = 1;
    const double v = lgamma_signed(x, sign);
    return sign * std::exp(-v);
}

namespace detail {

SignedLogLD log_gamma_ld(long double x) noexcept {
    int sign = 1;
#if defined(__GLIBC__)
    const long double v = ::lgammal_r(x, &sign);
#else
    const long double v = std::lgamma(x);
    sign = (x > 0.0L || static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
#endif
    return {v, sign};
}

bool near_gamma_pole(double x) noexcept {
    if (x > 0.5) return false;
    const double m = std::round(x);
    return std::abs(x - m) <= 1e-9 * std::max(1.0, std::abs(x));
}

}  // namespace detail

}  // namespace fracgreen
