#pragma once

// Endomorphism rings: Jacobson radical, bricks, Krull-Schmidt splitting and
// isomorphism of indecomposables.

#include <vector>

#include "taumut/module.hpp"

namespace taumut {

struct EndRing {
  HomSpace space;
  // Radical as homomorphisms (a basis).
  std::vector<ModuleHom> radical;

  std::size_t dim() const { return space.dim(); }
  std::size_t semisimple_dim() const { return space.dim() - radical.size(); }
};

// Radical from the trace form of the left regular representation. Over F_p
// this needs p > dim End (CharacteristicError otherwise).
EndRing endomorphism_ring(const Module& m);
std::vector<ModuleHom> end_radical(const Module& m);

bool is_brick(const Module& m);
// Pairwise Hom-orthogonal bricks.
bool is_semibrick(const std::vector<Module>& bricks);

// May throw IndeterminateDecomposition when End/rad cannot be resolved.
bool is_indecomposable(const Module& m);
// Indecomposable summands (zero module gives the empty list).
std::vector<Module> decompose(const Module& m);

// For indecomposable a and b: some composition b -> a -> b is invertible.
bool isomorphic_indecomposables(const Module& a, const Module& b);
// General case via decomposition and multiset matching.
bool is_isomorphic(const Module& a, const Module& b);

// Operator of f on the whole space, as the block diagonal matrix.
Mat total_matrix(const ModuleHom& f);

}  // namespace taumut
