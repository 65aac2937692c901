#pragma once

#include <string_view>

namespace fracgreen {

enum class Method {
    TaylorSeries,
    AsymptoticSeries,
    ClosedForm,
    Quadrature,
    Subordination,
};

constexpr std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::TaylorSeries: return "taylor-series";
        case Method::AsymptoticSeries: return "asymptotic-series";
        case Method::ClosedForm: return "closed-form";
        case Method::Quadrature: return "quadrature";
        case Method::Subordination: return "subordination";
    }
    return "unknown";
}

/// A numeric value together with an absolute error estimate and the route
/// that produced it.
struct EvaluationResult {
    double value = 0.0;
    double abs_error = 0.0;
    Method method = Method::ClosedForm;
    /// Set where the underlying integrals only converge conditionally or the
    /// error estimate is heuristic (1 < beta <= 2).
    bool reduced_confidence = false;
    /// Set for beta > alpha, where no probability interpretation is claimed.
    bool non_probabilistic = false;
};

}  // namespace fracgreen
