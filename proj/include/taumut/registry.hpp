#pragma once

// Isomorphism classes of indecomposable modules, keyed by small integer ids,
// with memoised Hom spaces and translates.

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "taumut/endo.hpp"
#include "taumut/homological.hpp"
#include "taumut/module.hpp"

namespace taumut {

class ModuleRegistry {
 public:
  explicit ModuleRegistry(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }

  // Id of the class of an indecomposable module; the first representative
  // registered for a class is kept.
  std::size_t intern(const Module& m);
  std::optional<std::size_t> find(const Module& m) const;
  const Module& module(std::size_t id) const;
  std::size_t size() const;

  const HomSpace& hom(std::size_t from, std::size_t to);
  std::size_t hom_dim(std::size_t from, std::size_t to) { return hom(from, to).dim(); }
  const EndRing& end(std::size_t id);
  // tau of the representative (zero for projectives).
  const Module& tau(std::size_t id);
  const Presentation& presentation(std::size_t id);
  // Vertex v with module(id) isomorphic to P_v.
  std::optional<std::size_t> projective_vertex(std::size_t id);

 private:
  std::optional<std::size_t> find_locked(const Module& m) const;

  AlgebraPtr alg_;
  mutable std::recursive_mutex mu_;
  std::deque<Module> modules_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<HomSpace>> homs_;
  std::map<std::size_t, std::unique_ptr<EndRing>> ends_;
  std::map<std::size_t, std::unique_ptr<Module>> taus_;
  std::map<std::size_t, std::unique_ptr<Presentation>> presentations_;
};

}  // namespace taumut
