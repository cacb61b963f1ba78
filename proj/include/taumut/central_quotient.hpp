#pragma once

// Quotients A/I by ideals generated by central radical elements, and a check
// that M -> M/MI identifies the exchange quivers of A and A/I.

#include <cstddef>
#include <string>
#include <vector>

#include "taumut/tau_tilting.hpp"

namespace taumut {

// z commutes with every basis element and has no idempotent component.
bool is_central_radical(const Algebra& alg, const AlgElem& z);

class CentralQuotient {
 public:
  // Throws std::invalid_argument for a non-central or non-radical generator,
  // or when the algebra was not built from a spec.
  CentralQuotient(AlgebraPtr alg, std::vector<AlgElem> generators);

  const AlgebraPtr& source() const { return alg_; }
  const AlgebraPtr& quotient() const { return quotient_; }
  const std::vector<AlgElem>& generators() const { return gens_; }

  // M/MI as a module over the quotient.
  Module reduce(const Module& m) const;
  // MI as a family in M.
  Subfamily ideal_part(const Module& m) const;
  // An A/I-module viewed over A (same matrices).
  Module lift(const Module& m) const;

 private:
  AlgebraPtr alg_;
  std::vector<AlgElem> gens_;
  AlgebraPtr quotient_;
};

struct EjrReport {
  std::size_t source_vertices = 0, quotient_vertices = 0;
  std::size_t source_arrows = 0, quotient_arrows = 0;
  bool complete = false;
  bool vertex_bijection = false;
  bool arrow_bijection = false;
  bool labels_fixed = false;
  bool summand_counts_preserved = false;
  bool semibricks_preserved = false;
  std::vector<std::string> notes;
  bool ok() const {
    return complete && vertex_bijection && arrow_bijection && labels_fixed &&
           summand_counts_preserved && semibricks_preserved;
  }
};

EjrReport verify_ejr(const CentralQuotient& q, const ExploreOptions& opts = {});

}  // namespace taumut
