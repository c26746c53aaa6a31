#pragma once

#include <stdexcept>
#include <string>

namespace chern {

/// A user-facing diagnostic: bad input, hypothesis not met, no stabilization.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical invariant that must hold for valid input is
/// violated, e.g. a positive Chern number for a parameter ideal.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chern
