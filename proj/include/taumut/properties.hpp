#pragma once

// Structural invariants of a complete exchange quiver, checked one by one.

#include <string>
#include <vector>

#include "taumut/tau_tilting.hpp"

namespace taumut {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation
};

struct PropertyReport {
  std::vector<PropertyResult> results;
  bool ok() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
};

// Runs every check; an incomplete quiver fails the first one and skips the
// checks that need completeness.
PropertyReport check_properties(TauTiltingEngine& engine, const ExchangeQuiver& q);

}  // namespace taumut
