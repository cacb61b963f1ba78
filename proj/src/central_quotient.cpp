#include "taumut/central_quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "taumut/endo.hpp"

namespace taumut {

bool is_central_radical(const Algebra& alg, const AlgElem& z) {
  if (z.size() != alg.dimension()) throw std::invalid_argument("element has the wrong length");
  for (std::size_t b = 0; b < alg.dimension(); ++b)
    if (alg.basis()[b].length() == 0 && !z[b].is_zero()) return false;
  for (std::size_t b = 0; b < alg.dimension(); ++b) {
    AlgElem e = alg.zero_element();
    e[b] = Scalar::one(alg.field());
    AlgElem left = alg.multiply(z, e), right = alg.multiply(e, z);
    for (std::size_t i = 0; i < left.size(); ++i)
      if (!(left[i] == right[i])) return false;
  }
  return true;
}

CentralQuotient::CentralQuotient(AlgebraPtr alg, std::vector<AlgElem> generators)
    : alg_(std::move(alg)), gens_(std::move(generators)) {
  if (!alg_->spec()) throw std::invalid_argument("algebra has no spec to extend");
  for (const auto& z : gens_)
    if (!is_central_radical(*alg_, z))
      throw std::invalid_argument("generator " + alg_->element_string(z) +
                                  " is not central and radical");
  AlgebraSpec spec = *alg_->spec();
  for (const auto& z : gens_) {
    // One relation per e_v z e_w component.
    std::map<std::pair<std::size_t, std::size_t>, Relation> parts;
    for (std::size_t b = 0; b < z.size(); ++b) {
      if (z[b].is_zero()) continue;
      const Path& p = alg_->basis()[b];
      RelationTerm t{z[b].to_string(), {}};
      for (auto a : p.arrows) t.path.push_back(alg_->quiver().arrows[a].name);
      parts[{p.source, p.target}].push_back(std::move(t));
    }
    for (auto& [k, rel] : parts) spec.relations.push_back(std::move(rel));
  }
  quotient_ = build_algebra(spec);
}

Subfamily CentralQuotient::ideal_part(const Module& m) const {
  Subfamily gens = zero_family(m);
  const std::size_t n = m.num_vertices();
  for (const auto& z : gens_)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        if (m.dim_at(v) == 0 || m.dim_at(w) == 0) continue;
        Mat act = m.element_action(z, v, w);
        if (!act.is_zero()) gens[w] = Mat::hstack({gens[w], act}, m.field(), m.dim_at(w));
      }
  return generated_family(m, gens);
}

Module CentralQuotient::reduce(const Module& m) const {
  if (m.algebra() != alg_) throw std::invalid_argument("module over a different algebra");
  Module q = taumut::quotient(m, ideal_part(m)).module;
  Module out(quotient_, q.dims(), q.arrow_maps());
  if (!out.satisfies_relations()) throw std::logic_error("M/MI is not an A/I-module");
  return out;
}

Module CentralQuotient::lift(const Module& m) const {
  if (m.algebra() != quotient_) throw std::invalid_argument("module over a different algebra");
  return Module(alg_, m.dims(), m.arrow_maps());
}

EjrReport verify_ejr(const CentralQuotient& cq, const ExploreOptions& opts) {
  EjrReport r;
  TauTiltingEngine big(cq.source()), small(cq.quotient());
  ExchangeQuiver qa = big.explore(opts), qb = small.explore(opts);
  r.source_vertices = qa.vertices.size();
  r.quotient_vertices = qb.vertices.size();
  r.source_arrows = qa.arrows.size();
  r.quotient_arrows = qb.arrows.size();
  r.complete = qa.complete && qb.complete;
  if (!r.complete) r.notes.push_back("exploration incomplete at the depth limit");

  r.summand_counts_preserved = true;
  std::vector<std::optional<std::size_t>> image(qa.vertices.size());
  for (std::size_t v = 0; v < qa.vertices.size(); ++v) {
    std::vector<Module> parts;
    for (auto id : qa.vertices[v].summands) {
      Module red = cq.reduce(big.registry().module(id));
      if (decompose(red).size() != 1) r.summand_counts_preserved = false;
      parts.push_back(std::move(red));
    }
    SupportPair p = small.make_pair(parts, {});
    for (std::size_t w = 0; w < small.rank(); ++w) {
      bool zero = true;
      for (auto id : p.summands) zero = zero && small.registry().module(id).dim_at(w) == 0;
      if (zero) p.support_complement.push_back(w);
    }
    if (p.summands.size() != qa.vertices[v].summands.size()) r.summand_counts_preserved = false;
    image[v] = qb.find(p);
  }
  std::vector<bool> hit(qb.vertices.size(), false);
  r.vertex_bijection = qa.vertices.size() == qb.vertices.size();
  for (const auto& im : image) {
    if (!im || hit[*im]) r.vertex_bijection = false;
    else hit[*im] = true;
  }
  if (!r.vertex_bijection) r.notes.push_back("reduction is not a bijection on vertices");

  // Arrows and labels: a label is an A/I-module already, so it must equal
  // its own reduction and the label of the image arrow.
  r.arrow_bijection = qa.arrows.size() == qb.arrows.size() && r.vertex_bijection;
  r.labels_fixed = true;
  std::vector<bool> used(qb.arrows.size(), false);
  for (const auto& a : qa.arrows) {
    const Module& label = big.registry().module(a.label);
    Module red = cq.reduce(label);
    if (red.dims() != label.dims()) r.labels_fixed = false;
    if (!image[a.source] || !image[a.target]) continue;
    bool matched = false;
    for (std::size_t j = 0; j < qb.arrows.size() && !matched; ++j) {
      const auto& b = qb.arrows[j];
      if (used[j] || b.source != *image[a.source] || b.target != *image[a.target]) continue;
      used[j] = matched = true;
      const Module& lb = small.registry().module(b.label);
      if (lb.dims() != red.dims() || !isomorphic_indecomposables(lb, red)) r.labels_fixed = false;
    }
    if (!matched) r.arrow_bijection = false;
  }
  if (!r.arrow_bijection) r.notes.push_back("reduction is not a bijection on arrows");
  if (!r.labels_fixed) r.notes.push_back("some label changes under reduction");

  r.semibricks_preserved = r.vertex_bijection;
  for (std::size_t v = 0; v < qa.vertices.size() && r.semibricks_preserved; ++v) {
    std::vector<Module> sa, sb;
    for (auto id : big.semibrick_of(qa.vertices[v])) sa.push_back(cq.reduce(big.registry().module(id)));
    for (auto id : small.semibrick_of(qb.vertices[*image[v]])) sb.push_back(small.registry().module(id));
    if (sa.size() != sb.size()) {
      r.semibricks_preserved = false;
      break;
    }
    for (const auto& x : sa) {
      bool found = false;
      for (const auto& y : sb) found = found || (x.dims() == y.dims() && isomorphic_indecomposables(x, y));
      if (!found) r.semibricks_preserved = false;
    }
  }
  if (!r.semibricks_preserved) r.notes.push_back("semibricks differ");
  return r;
}

}  // namespace taumut
