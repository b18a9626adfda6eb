#pragma once

#include <stdexcept>
#include <string>

namespace cheby {

/// Root iteration failed to reach its residual target within the sweep budget.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Input polynomial is outside the domain of the requested construction
/// (zero polynomial, constants/linear, monomials, ...).
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

/// Numerator and denominator both vanish to machine precision at the point:
/// the map was not properly reduced there.
struct IndeterminateValue : std::runtime_error {
    explicit IndeterminateValue(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplier values for which no member of the cubic family exists.
struct ForbiddenLambda : std::runtime_error {
    explicit ForbiddenLambda(const std::string& what) : std::runtime_error(what) {}
};

/// A threshold decision (e.g. "is p''(c) zero?") fell inside the gray zone
/// where neither answer is numerically defensible.
struct AmbiguousClassification : std::runtime_error {
    explicit AmbiguousClassification(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cheby
