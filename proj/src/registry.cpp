#include "taumut/registry.hpp"

#include <stdexcept>

namespace taumut {

std::optional<std::size_t> ModuleRegistry::find_locked(const Module& m) const {
  auto it = by_dims_.find(m.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (auto id : it->second)
    if (isomorphic_indecomposables(modules_[id], m)) return id;
  return std::nullopt;
}

std::optional<std::size_t> ModuleRegistry::find(const Module& m) const {
  std::lock_guard lock(mu_);
  return find_locked(m);
}

std::size_t ModuleRegistry::intern(const Module& m) {
  if (m.algebra() != alg_) throw std::invalid_argument("module over a different algebra");
  if (m.is_zero()) throw std::invalid_argument("cannot register the zero module");
  std::lock_guard lock(mu_);
  if (auto id = find_locked(m)) return *id;
  modules_.push_back(m);
  std::size_t id = modules_.size() - 1;
  by_dims_[m.dims()].push_back(id);
  return id;
}

const Module& ModuleRegistry::module(std::size_t id) const {
  std::lock_guard lock(mu_);
  return modules_.at(id);
}

std::size_t ModuleRegistry::size() const {
  std::lock_guard lock(mu_);
  return modules_.size();
}

const HomSpace& ModuleRegistry::hom(std::size_t from, std::size_t to) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(from, to);
  auto it = homs_.find(key);
  if (it == homs_.end())
    it = homs_.emplace(key, std::make_unique<HomSpace>(hom_space(modules_.at(from), modules_.at(to))))
             .first;
  return *it->second;
}

const EndRing& ModuleRegistry::end(std::size_t id) {
  std::lock_guard lock(mu_);
  auto it = ends_.find(id);
  if (it == ends_.end())
    it = ends_.emplace(id, std::make_unique<EndRing>(endomorphism_ring(modules_.at(id)))).first;
  return *it->second;
}

const Module& ModuleRegistry::tau(std::size_t id) {
  std::lock_guard lock(mu_);
  auto it = taus_.find(id);
  if (it == taus_.end())
    it = taus_.emplace(id, std::make_unique<Module>(taumut::tau(modules_.at(id)))).first;
  return *it->second;
}

const Presentation& ModuleRegistry::presentation(std::size_t id) {
  std::lock_guard lock(mu_);
  auto it = presentations_.find(id);
  if (it == presentations_.end())
    it = presentations_
             .emplace(id, std::make_unique<Presentation>(minimal_presentation(modules_.at(id))))
             .first;
  return *it->second;
}

std::optional<std::size_t> ModuleRegistry::projective_vertex(std::size_t id) {
  const auto& pres = presentation(id);
  if (pres.p0_vertices.size() == 1 && pres.p1_vertices.empty()) return pres.p0_vertices.front();
  return std::nullopt;
}

}  // namespace taumut
