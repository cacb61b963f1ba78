#pragma once

// Two-term simple-minded collections S u S'[1]: assembly from exchange quiver
// vertices, axiom checks and left mutation at a degree-0 brick.

#include <cstddef>
#include <string>
#include <vector>

#include "taumut/tau_tilting.hpp"

namespace taumut {

struct TwoTermSMC {
  std::vector<Module> degree0;
  std::vector<Module> degree_minus1;  // placed in shift [1]
  std::size_t size() const { return degree0.size() + degree_minus1.size(); }
};

struct SmcReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

TwoTermSMC smc_of_vertex(TauTiltingEngine& engine, const SupportPair& pair);

// Brick, semibrick, Hom(S, S') = 0, Ext^1(S, S') = 0 and |S| + |S'| = n.
SmcReport check_smc_axioms(const TwoTermSMC& x);

// Mutation at degree0[index]. Requires Ext^1(S0, S0) = 0.
TwoTermSMC smc_left_mutate(const TwoTermSMC& x, std::size_t index);

// Equality as sets of isomorphism classes with shift flags.
bool same_collection(const TwoTermSMC& a, const TwoTermSMC& b);

struct CoincidenceReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // labels with self-extensions
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For each arrow M -> N labeled S: mutating smc(M) at S gives smc(N).
CoincidenceReport check_label_coincidence(TauTiltingEngine& engine, const ExchangeQuiver& q);

}  // namespace taumut
