#pragma once

// Per-triplet residue expansions of the Green kernel, calibrated once
// against the Mellin-Barnes oracle and shared between threads.

#include <cstddef>
#include <memory>
#include <optional>

#include "fracgreen/evaluation.hpp"
#include "fracgreen/mb_engine.hpp"
#include "fracgreen/params.hpp"

namespace fracgreen::detail {

struct CalibratedExpansions {
    /// Empty when the side has no usable terms. A side that runs into a
    /// pole collision keeps the terms in front of it (cut_at is set).
    std::optional<PowerSeriesExpansion> at_zero;
    std::optional<PowerSeriesExpansion> at_infinity;

    bool collided() const noexcept;
};

/// Thread safe; concurrent first requests may calibrate twice, the last
/// insert wins and both results are identical.
std::shared_ptr<const CalibratedExpansions> calibrated_expansions(const FractionalTriplet& t);

std::size_t expansion_cache_size();
void clear_expansion_cache();

/// K(x), x > 0, from whichever expansion is trusted at x. Throws
/// AccuracyError when neither is.
EvaluationResult series_kernel(const FractionalTriplet& t, double x, double tol);

/// K(0) from the leading terms of the expansion at zero. Throws DomainError
/// when K diverges at the origin.
EvaluationResult kernel_at_origin(const FractionalTriplet& t);

}  // namespace fracgreen::detail
