#pragma once

// Extended-precision helpers shared by the series builders.

namespace fracgreen::detail {

struct SignedLogLD {
    long double log_abs;
    int sign;
};

/// log|Gamma(x)| and sign in long double; x must not be a pole.
SignedLogLD log_gamma_ld(long double x) noexcept;

/// True when x is within a relative 1e-9 of a nonpositive integer.
bool near_gamma_pole(double x) noexcept;

}  // namespace fracgreen::detail
