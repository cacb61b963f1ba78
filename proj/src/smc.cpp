#include "taumut/smc.hpp"

#include <algorithm>
#include <stdexcept>

#include "taumut/errors.hpp"

namespace taumut {

namespace {

std::string pair_name(const Module& a, const Module& b) {
  return a.dim_string() + " / " + b.dim_string();
}

// Summands of m not isomorphic to s0.
std::vector<Module> without_copies(const Module& m, const Module& s0) {
  std::vector<Module> out;
  for (auto& part : decompose(m))
    if (part.dims() != s0.dims() || !isomorphic_indecomposables(part, s0))
      out.push_back(std::move(part));
  return out;
}

bool same_multiset(const std::vector<Module>& a, const std::vector<Module>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || b[j].dims() != x.dims()) continue;
      if (isomorphic_indecomposables(x, b[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

// Middle term of the universal extension 0 -> s0^e -> Y -> s -> 0, as the
// pushout of the syzygy inclusion along the Ext classes.
Module universal_extension(const Module& s, const Module& s0) {
  ExtClasses ext = ext1_classes(s, s0);
  if (ext.classes.empty()) return s;
  const auto& alg = s.algebra();
  DirectSum copies = direct_sum(alg, std::vector<Module>(ext.classes.size(), s0));
  ModuleHom xi = hom_into_sum(copies, ext.classes);
  DirectSum mid = direct_sum(alg, {ext.pres.p0.sum, copies.sum});
  ModuleHom glue = hom_into_sum(mid, {ext.pres.syzygy.inclusion, scale(xi, Scalar(alg->field(), -1))});
  auto rest = without_copies(cokernel(glue, mid.sum).module, s0);
  if (rest.size() != 1)
    throw TheoryViolation("universal extension of " + pair_name(s, s0) + " has " +
                          std::to_string(rest.size()) + " new summands");
  return rest.front();
}

}  // namespace

TwoTermSMC smc_of_vertex(TauTiltingEngine& engine, const SupportPair& pair) {
  TwoTermSMC out;
  auto& reg = engine.registry();
  for (const auto& sb : engine.smc_of(pair))
    (sb.shifted ? out.degree_minus1 : out.degree0).push_back(reg.module(sb.brick));
  auto report = check_smc_axioms(out);
  if (!report.ok()) throw TheoryViolation("vertex collection fails: " + report.violations.front());
  return out;
}

SmcReport check_smc_axioms(const TwoTermSMC& x) {
  SmcReport r;
  auto check_side = [&](const std::vector<Module>& side, const char* where) {
    for (const auto& b : side)
      if (!is_brick(b)) r.violations.push_back(std::string("not a brick in ") + where + ": " + b.dim_string());
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = 0; j < side.size(); ++j)
        if (i != j && hom_dim(side[i], side[j]) != 0)
          r.violations.push_back(std::string("Hom nonzero in ") + where + ": " +
                                 pair_name(side[i], side[j]));
  };
  check_side(x.degree0, "degree 0");
  check_side(x.degree_minus1, "degree -1");
  for (const auto& s : x.degree0)
    for (const auto& t : x.degree_minus1) {
      if (hom_dim(s, t) != 0) r.violations.push_back("Hom(S, S') nonzero: " + pair_name(s, t));
      if (ext1_dim(s, t) != 0) r.violations.push_back("Ext1(S, S') nonzero: " + pair_name(s, t));
    }
  std::size_t n = 0;
  if (!x.degree0.empty()) n = x.degree0.front().num_vertices();
  else if (!x.degree_minus1.empty()) n = x.degree_minus1.front().num_vertices();
  if (x.size() != n)
    r.violations.push_back("size " + std::to_string(x.size()) + " differs from rank " +
                           std::to_string(n));
  return r;
}

TwoTermSMC smc_left_mutate(const TwoTermSMC& x, std::size_t index) {
  if (index >= x.degree0.size()) throw std::out_of_range("no such degree 0 brick");
  const Module& s0 = x.degree0[index];
  if (!is_brick(s0)) throw std::invalid_argument("mutation target is not a brick");
  if (ext1_dim(s0, s0) != 0)
    throw std::invalid_argument("mutation target " + s0.dim_string() + " has self-extensions");

  TwoTermSMC out;
  for (std::size_t k = 0; k < x.degree0.size(); ++k)
    if (k != index) out.degree0.push_back(universal_extension(x.degree0[k], s0));
  out.degree_minus1.push_back(s0);

  for (const auto& t : x.degree_minus1) {
    HomSpace hs = hom_space(t, s0);
    if (hs.dim() == 0) {
      out.degree_minus1.push_back(t);
      continue;
    }
    // Cone of the universal map t -> s0^h: (ker f)[1] plus coker f. Copies
    // of s0 in the cokernel come from a non-minimal approximation.
    DirectSum copies = direct_sum(t.algebra(), std::vector<Module>(hs.dim(), s0));
    ModuleHom f = hom_into_sum(copies, hs.basis());
    Module ker = kernel(f, t).module;
    auto coker = without_copies(cokernel(f, copies.sum).module, s0);
    if (!ker.is_zero() && !coker.empty())
      throw TheoryViolation("approximation of " + t.dim_string() +
                            " is neither injective nor surjective");
    if (!ker.is_zero()) {
      out.degree_minus1.push_back(ker);
    } else if (coker.size() == 1) {
      out.degree0.push_back(coker.front());
    } else {
      throw TheoryViolation("cone of the approximation of " + t.dim_string() + " has " +
                            std::to_string(coker.size()) + " summands");
    }
  }
  auto report = check_smc_axioms(out);
  if (!report.ok()) throw TheoryViolation("mutated collection fails: " + report.violations.front());
  return out;
}

bool same_collection(const TwoTermSMC& a, const TwoTermSMC& b) {
  return same_multiset(a.degree0, b.degree0) && same_multiset(a.degree_minus1, b.degree_minus1);
}

CoincidenceReport check_label_coincidence(TauTiltingEngine& engine, const ExchangeQuiver& q) {
  CoincidenceReport r;
  std::vector<std::optional<TwoTermSMC>> cache(q.vertices.size());
  auto smc = [&](std::size_t v) -> const TwoTermSMC& {
    if (!cache[v]) cache[v] = smc_of_vertex(engine, q.vertices[v]);
    return *cache[v];
  };
  auto& reg = engine.registry();
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    const Module& label = reg.module(a.label);
    if (ext1_dim(label, label) != 0) {
      ++r.skipped;
      continue;
    }
    const TwoTermSMC& src = smc(a.source);
    std::optional<std::size_t> at;
    for (std::size_t k = 0; k < src.degree0.size() && !at; ++k)
      if (src.degree0[k].dims() == label.dims() && isomorphic_indecomposables(src.degree0[k], label))
        at = k;
    std::string name = "arrow " + std::to_string(a.source) + "->" + std::to_string(a.target);
    ++r.checked;
    if (!at) {
      r.failures.push_back(name + ": label missing from degree 0");
      continue;
    }
    if (!same_collection(smc_left_mutate(src, *at), smc(a.target)))
      r.failures.push_back(name + ": mutated collection differs");
  }
  return r;
}

}  // namespace taumut
