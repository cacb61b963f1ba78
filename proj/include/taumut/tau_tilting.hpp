#pragma once

// Support tau-tilting pairs, left mutation, brick labels and the exchange
// quiver.

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "taumut/registry.hpp"

namespace taumut {

struct SupportPair {
  std::vector<std::size_t> summands;            // registry ids, ascending
  std::vector<std::size_t> support_complement;  // vertices, ascending
  auto operator<=>(const SupportPair&) const = default;
};

struct ExchangeArrow {
  std::size_t source;
  std::size_t target;
  std::size_t mutated;  // registry id of the summand replaced
  std::size_t label;    // registry id of the brick label
};

struct ExchangeQuiver {
  std::vector<SupportPair> vertices;
  std::vector<std::size_t> depth;
  std::vector<ExchangeArrow> arrows;
  bool complete = false;

  std::optional<std::size_t> find(const SupportPair& p) const;
  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;
};

struct ExploreOptions {
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
  std::size_t max_vertices = 200000;
};

// Summand of the dual pair: either a module (registry id) or a vertex of the
// cosupport. `origin` is the silting index it comes from: module summands of
// the original pair first, then its support complement in ascending order.
struct DualSummand {
  std::size_t origin;
  std::optional<std::size_t> module;
  std::optional<std::size_t> cosupport_vertex;
};

struct MutationResult {
  SupportPair pair;
  std::size_t label;
};

struct TopLabel {
  std::size_t summand;  // registry id
  std::size_t brick;    // registry id
};

// One entry of a two-term simple-minded collection: a brick in degree 0 or
// shifted to degree -1.
struct ShiftedBrick {
  std::size_t brick;
  bool shifted;
  auto operator<=>(const ShiftedBrick&) const = default;
};

class TauTiltingEngine {
 public:
  explicit TauTiltingEngine(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  ModuleRegistry& registry() { return registry_; }
  std::size_t rank() const { return alg_->num_vertices(); }

  // (A, 0).
  SupportPair initial_pair();
  // Decomposes the given modules and registers their summands.
  SupportPair make_pair(const std::vector<Module>& modules,
                        std::vector<std::size_t> support_complement);
  Module module_of(const SupportPair& p);

  // Summands M_i with nonzero brick label N_i = M_i / (radical maps in).
  std::vector<TopLabel> mutable_summands(const SupportPair& p);
  MutationResult left_mutate(const SupportPair& p, std::size_t summand);
  ExchangeQuiver explore(const ExploreOptions& opts = {});

  // Labels of the arrows leaving p.
  std::vector<std::size_t> semibrick_of(const SupportPair& p);

  std::vector<DualSummand> dual_pair(const SupportPair& p);
  // Socle brick of each module summand of the dual pair (nullopt when the
  // socle quotient vanishes or the summand is a cosupport vertex).
  std::vector<std::optional<std::size_t>> socle_labels(const std::vector<DualSummand>& dual);
  std::vector<std::size_t> cosemibrick_of(const SupportPair& p);

  // Two-term simple-minded collection indexed like the silting summands.
  std::vector<ShiftedBrick> smc_of(const SupportPair& p);

  // Bongartz completion of a tau-rigid module given by registry ids.
  SupportPair bongartz_completion(const std::vector<std::size_t>& rigid);

  bool is_support_tau_tilting(const SupportPair& p);
  bool is_tau_rigid_set(const std::vector<std::size_t>& ids);

  // Brick label of a single summand, or nullopt if it is not left mutable.
  std::optional<std::size_t> top_label(const SupportPair& p, std::size_t summand);

  void set_invariant_checks(bool on) { check_invariants_ = on; }

 private:
  std::size_t tau_hom_dim(std::size_t from, std::size_t to);

  AlgebraPtr alg_;
  ModuleRegistry registry_;
  bool check_invariants_ = true;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> tau_homs_;
  std::map<std::pair<SupportPair, std::size_t>, std::optional<std::size_t>> top_labels_;
};

// Full subquiver on the vertices whose module part contains every id in
// `summands` and whose support complement contains `complement`.
ExchangeQuiver restrict_quiver(const ExchangeQuiver& q, const std::vector<std::size_t>& summands,
                               const std::vector<std::size_t>& complement = {});

// Sum of images of the maps, as a family in their common target.
Subfamily span_of_images(const std::vector<ModuleHom>& maps, const Module& target);
// Intersection of the kernels, as a family in their common source.
Subfamily common_kernel(const std::vector<ModuleHom>& maps, const Module& source);

}  // namespace taumut
