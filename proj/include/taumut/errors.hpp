#pragma once

#include <stdexcept>
#include <string>

namespace taumut {

// Raised when a computed object contradicts a structural theorem the engine
// relies on (e.g. a mutation producing two new summands). Always a bug.
class TheoryViolation : public std::logic_error {
 public:
  explicit TheoryViolation(const std::string& what)
      : std::logic_error("theory violation: " + what) {}
};

// The End/rad analysis could not certify a decomposition.
class IndeterminateDecomposition : public std::runtime_error {
 public:
  explicit IndeterminateDecomposition(const std::string& what)
      : std::runtime_error("indeterminate decomposition: " + what) {}
};

// Characteristic too small for the trace-form radical.
class CharacteristicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taumut
