#pragma once

#include <stdexcept>
#include <string>

namespace ernst {

/// Evaluation outside the admissible domain of a function (branch point,
/// pole of csc/cot, nonpositive argument of a real log/sqrt, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vanishing denominator of a fractional-linear map.
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (detected before any computation).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ernst
