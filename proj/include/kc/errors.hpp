#pragma once

#include <stdexcept>
#include <string>

namespace kc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values from engines instantiated for different spatial dimensions met.
struct DimensionMismatch : Error {
  DimensionMismatch(int lhs, int rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

struct IndexRange : Error {
  IndexRange(const std::string& what, long value)
      : Error(what + " out of range: " + std::to_string(value)) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// Structure-function value went nonpositive inside a representation.
struct PositivityViolation : Error {
  int level;
  explicit PositivityViolation(int k, const std::string& value)
      : Error("structure function not positive at k=" + std::to_string(k) + " (value " + value + ")"),
        level(k) {}
};

// Phi(0) or Phi(p+1) failed to vanish for the requested representation.
struct BoundaryViolation : Error {
  using Error::Error;
};

}  // namespace kc
