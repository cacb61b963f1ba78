#pragma once

// Finite-dimensional right modules as quiver representations, morphisms as
// vertexwise matrices, and the submodule/quotient/kernel calculus on top.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taumut/algebra.hpp"
#include "taumut/exact_linalg.hpp"

namespace taumut {

class Module {
 public:
  Module() = default;
  // arrow_maps[a] is dims[target] x dims[source]. Shapes are checked; the
  // relations are not (see satisfies_relations).
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps);
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t num_vertices() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim_at(std::size_t v) const { return dims_[v]; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<std::size_t> support() const;
  // Digits of the dimension vector, e.g. "011"; comma separated if any
  // entry exceeds 9.
  std::string dim_string() const;

  const Mat& arrow_map(std::size_t a) const { return maps_[a]; }
  const std::vector<Mat>& arrow_maps() const { return maps_; }
  // dims[target] x dims[source]; zero if the path is at least N long.
  Mat path_action(const Path& p) const;
  // Action of e_v x e_w as a map M_v -> M_w.
  Mat element_action(const AlgElem& x, std::size_t v, std::size_t w) const;

  // Every ideal generator and every path of length N act as zero.
  bool satisfies_relations() const;

  bool operator==(const Module& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> maps_;
};

struct ModuleHom {
  // components[v] is dim N_v x dim M_v.
  std::vector<Mat> components;

  bool is_zero() const;
  std::size_t rank() const;
  // Column-major concatenation of all components.
  Mat flatten() const;
  bool operator==(const ModuleHom& o) const { return components == o.components; }
};

ModuleHom zero_hom(const Module& from, const Module& to);
ModuleHom identity_hom(const Module& m);
// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom add(const ModuleHom& f, const ModuleHom& g);
ModuleHom scale(const ModuleHom& f, const Scalar& s);
bool is_module_hom(const Module& from, const Module& to, const ModuleHom& f);
bool is_injective(const ModuleHom& f, const Module& from);
bool is_surjective(const ModuleHom& f, const Module& to);
bool is_isomorphism(const ModuleHom& f, const Module& from, const Module& to);

class HomSpace {
 public:
  HomSpace(Module from, Module to, std::vector<ModuleHom> basis);
  const Module& from() const { return from_; }
  const Module& to() const { return to_; }
  const std::vector<ModuleHom>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  ModuleHom combination(const std::vector<Scalar>& coeffs) const;
  // Coordinates of f in the basis, or nullopt if f is not in the span.
  std::optional<std::vector<Scalar>> coordinates(const ModuleHom& f) const;

 private:
  void prepare() const;
  Module from_, to_;
  std::vector<ModuleHom> basis_;
  mutable bool prepared_ = false;
  mutable std::vector<std::size_t> pivot_rows_;
  mutable Mat solver_;
};

HomSpace hom_space(const Module& from, const Module& to);
std::size_t hom_dim(const Module& from, const Module& to);

// Per-vertex subspaces given by basis columns (dims[v] x k_v).
using Subfamily = std::vector<Mat>;

Subfamily zero_family(const Module& m);
Subfamily full_family(const Module& m);
std::size_t family_dim(const Subfamily& s);
Subfamily sum_families(const Subfamily& a, const Subfamily& b);
Subfamily intersect_families(const Subfamily& a, const Subfamily& b);
// Smallest submodule containing the given vectors.
Subfamily generated_family(const Module& m, const Subfamily& gens);
// rad M: sum of the images of all arrows.
Subfamily radical_family(const Module& m);
// soc M: common kernel of all arrows.
Subfamily socle_family(const Module& m);
Subfamily image_family(const ModuleHom& f, const Module& to);
Subfamily kernel_family(const ModuleHom& f, const Module& from);

struct Submodule {
  Module module;
  ModuleHom inclusion;
};

struct Quotient {
  Module module;
  ModuleHom projection;
};

// Throws std::invalid_argument if the family is not closed under the arrows.
Submodule submodule(const Module& m, const Subfamily& s);
Quotient quotient(const Module& m, const Subfamily& s);
Submodule kernel(const ModuleHom& f, const Module& from);
Quotient cokernel(const ModuleHom& f, const Module& to);
Submodule image(const ModuleHom& f, const Module& to);

struct DirectSum {
  Module sum;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};

DirectSum direct_sum(AlgebraPtr alg, const std::vector<Module>& parts);
// Morphism into a direct sum with the given components f_i: M -> N_i.
ModuleHom hom_into_sum(const DirectSum& target, const std::vector<ModuleHom>& parts);
// Morphism out of a direct sum with components f_i: M_i -> N.
ModuleHom hom_from_sum(const DirectSum& source, const std::vector<ModuleHom>& parts);

Module projective(const AlgebraPtr& alg, std::size_t v);
Module injective(const AlgebraPtr& alg, std::size_t v);
Module simple(const AlgebraPtr& alg, std::size_t v);

// Module with prescribed dimension vector and arrow matrices given as
// row-major integer lists. Convenience for fixtures and the CLI.
Module module_from_ints(const AlgebraPtr& alg, const std::vector<std::size_t>& dims,
                        const std::vector<std::vector<std::vector<long>>>& maps);

}  // namespace taumut
