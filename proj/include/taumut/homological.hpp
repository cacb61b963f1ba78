#pragma once

// Minimal projective presentations, the Nakayama functor, Auslander-Reiten
// translates and Ext^1.

#include <vector>

#include "taumut/module.hpp"

namespace taumut {

struct Presentation {
  std::vector<std::size_t> p0_vertices;  // tops of P0, with multiplicity
  std::vector<std::size_t> p1_vertices;  // tops of P1
  DirectSum p0, p1;
  ModuleHom p0_to_m;
  ModuleHom p1_to_p0;
  Submodule syzygy;  // kernel of p0_to_m
  // entries[i][j] in e_{p0_vertices[i]} A e_{p1_vertices[j]}: image of the
  // j-th generator of P1 in the i-th summand of P0.
  std::vector<std::vector<AlgElem>> entries;
};

Presentation minimal_presentation(const Module& m);

// The map P_v -> X sending e_v to x (x a column vector in X_v).
ModuleHom hom_from_projective(std::size_t v, const Module& x, const Mat& image_of_idempotent);

// Vertex multiplicities of top(m).
std::vector<std::size_t> top_multiplicities(const Module& m);

// Nakayama functor on the presentation differential: nu P1 -> nu P0.
struct NakayamaImage {
  DirectSum source;  // sum of I_{p1_vertices[j]}
  DirectSum target;  // sum of I_{p0_vertices[i]}
  ModuleHom map;
};
NakayamaImage nakayama_of_presentation(const Presentation& pres);

Module tau(const Module& m);
Module tau_inverse(const Module& m);

// D = Hom_K(-, K) into modules over `target`, which must be the opposite
// algebra of m's algebra (same arrows, reversed).
Module dual_module(const Module& m, const AlgebraPtr& target);
// Cached opposite algebra for the duality.
AlgebraPtr opposite_of(const AlgebraPtr& alg);

std::size_t ext1_dim(const Module& m, const Module& n);

// Representatives of a basis of Ext^1(m, n) as maps syzygy(m) -> n, together
// with the presentation used.
struct ExtClasses {
  Presentation pres;
  std::vector<ModuleHom> classes;
};
ExtClasses ext1_classes(const Module& m, const Module& n);

// Sum of images of all maps u -> x.
Subfamily trace_family(const Module& u, const Module& x);
bool in_fac(const Module& x, const Module& u);

bool is_tau_rigid(const Module& m);
// Hom(m, tau m) = 0 and m vanishes on every vertex of `projective_vertices`.
bool is_tau_rigid_pair(const Module& m, const std::vector<std::size_t>& projective_vertices);

}  // namespace taumut
