#pragma once

#include <stdexcept>

namespace pof {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance validation failures.
struct LengthMismatch : Error { using Error::Error; };
struct NonPositiveLimit : Error { using Error::Error; };
struct NegativeCost : Error { using Error::Error; };
struct UnachievableMaximum : Error { using Error::Error; };

// Parameter failures.
struct InvalidN : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// Iterative solver failures.
struct ToleranceNotReached : Error { using Error::Error; };

}  // namespace pof
