#include "taumut/tau_tilting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "taumut/errors.hpp"

namespace taumut {

namespace {

std::vector<std::size_t> vanishing_vertices(ModuleRegistry& reg, const std::vector<std::size_t>& ids,
                                            std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    bool zero = true;
    for (auto id : ids) zero = zero && reg.module(id).dim_at(v) == 0;
    if (zero) out.push_back(v);
  }
  return out;
}

}  // namespace

Subfamily span_of_images(const std::vector<ModuleHom>& maps, const Module& target) {
  Subfamily out;
  for (std::size_t v = 0; v < target.num_vertices(); ++v) {
    std::vector<Mat> parts;
    for (const auto& f : maps)
      if (f.components[v].cols() > 0) parts.push_back(f.components[v]);
    if (parts.empty()) out.emplace_back(target.field(), target.dim_at(v), 0);
    else out.push_back(column_space(Mat::hstack(parts, target.field(), target.dim_at(v))));
  }
  return out;
}

Subfamily common_kernel(const std::vector<ModuleHom>& maps, const Module& source) {
  Subfamily out;
  for (std::size_t v = 0; v < source.num_vertices(); ++v) {
    std::vector<Mat> parts;
    for (const auto& f : maps)
      if (f.components[v].rows() > 0) parts.push_back(f.components[v]);
    if (parts.empty()) out.push_back(Mat::identity(source.field(), source.dim_at(v)));
    else out.push_back(kernel_matrix(Mat::vstack(parts, source.field(), source.dim_at(v))));
  }
  return out;
}

std::optional<std::size_t> ExchangeQuiver::find(const SupportPair& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == p) return i;
  return std::nullopt;
}

std::vector<std::size_t> ExchangeQuiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> ExchangeQuiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].target == v) out.push_back(i);
  return out;
}

TauTiltingEngine::TauTiltingEngine(AlgebraPtr alg) : alg_(alg), registry_(alg) {}

SupportPair TauTiltingEngine::initial_pair() {
  SupportPair p;
  for (std::size_t v = 0; v < rank(); ++v) p.summands.push_back(registry_.intern(projective(alg_, v)));
  std::sort(p.summands.begin(), p.summands.end());
  p.summands.erase(std::unique(p.summands.begin(), p.summands.end()), p.summands.end());
  return p;
}

SupportPair TauTiltingEngine::make_pair(const std::vector<Module>& modules,
                                        std::vector<std::size_t> support_complement) {
  SupportPair p;
  std::set<std::size_t> ids;
  for (const auto& m : modules)
    for (const auto& part : decompose(m)) ids.insert(registry_.intern(part));
  p.summands.assign(ids.begin(), ids.end());
  std::sort(support_complement.begin(), support_complement.end());
  support_complement.erase(std::unique(support_complement.begin(), support_complement.end()),
                           support_complement.end());
  p.support_complement = std::move(support_complement);
  return p;
}

Module TauTiltingEngine::module_of(const SupportPair& p) {
  std::vector<Module> parts;
  for (auto id : p.summands) parts.push_back(registry_.module(id));
  return direct_sum(alg_, parts).sum;
}

std::optional<std::size_t> TauTiltingEngine::top_label(const SupportPair& p, std::size_t summand) {
  auto key = std::make_pair(p, summand);
  if (auto it = top_labels_.find(key); it != top_labels_.end()) return it->second;
  const Module& mi = registry_.module(summand);
  std::vector<ModuleHom> maps;
  for (auto j : p.summands) {
    if (j == summand) continue;
    const auto& hs = registry_.hom(j, summand);
    maps.insert(maps.end(), hs.basis().begin(), hs.basis().end());
  }
  const auto& rad = registry_.end(summand).radical;
  maps.insert(maps.end(), rad.begin(), rad.end());
  Subfamily l = span_of_images(maps, mi);
  std::optional<std::size_t> out;
  if (family_dim(l) < mi.total_dim()) out = registry_.intern(quotient(mi, l).module);
  top_labels_.emplace(key, out);
  return out;
}

std::vector<TopLabel> TauTiltingEngine::mutable_summands(const SupportPair& p) {
  std::vector<TopLabel> out;
  for (auto id : p.summands)
    if (auto b = top_label(p, id)) out.push_back({id, *b});
  return out;
}

std::size_t TauTiltingEngine::tau_hom_dim(std::size_t from, std::size_t to) {
  auto key = std::make_pair(from, to);
  if (auto it = tau_homs_.find(key); it != tau_homs_.end()) return it->second;
  std::size_t d = hom_dim(registry_.module(from), registry_.tau(to));
  tau_homs_.emplace(key, d);
  return d;
}

bool TauTiltingEngine::is_tau_rigid_set(const std::vector<std::size_t>& ids) {
  for (auto a : ids)
    for (auto b : ids)
      if (tau_hom_dim(a, b) != 0) return false;
  return true;
}

bool TauTiltingEngine::is_support_tau_tilting(const SupportPair& p) {
  if (p.summands.size() + p.support_complement.size() != rank()) return false;
  for (auto v : p.support_complement)
    for (auto id : p.summands)
      if (registry_.module(id).dim_at(v) != 0) return false;
  return is_tau_rigid_set(p.summands);
}

MutationResult TauTiltingEngine::left_mutate(const SupportPair& p, std::size_t summand) {
  if (!std::binary_search(p.summands.begin(), p.summands.end(), summand))
    throw std::invalid_argument("not a summand of the pair");
  auto label = top_label(p, summand);
  if (!label) throw std::invalid_argument("summand is not left mutable");

  std::vector<std::size_t> rest;
  for (auto id : p.summands)
    if (id != summand) rest.push_back(id);

  // Left add(U)-approximation of X by all basis maps.
  std::vector<Module> targets;
  std::vector<ModuleHom> comps;
  for (auto j : rest) {
    const auto& hs = registry_.hom(summand, j);
    for (const auto& f : hs.basis()) {
      targets.push_back(registry_.module(j));
      comps.push_back(f);
    }
  }
  // Drop components that factor through the remaining ones; what is left is
  // still an approximation and the cokernel carries fewer add(U) summands.
  std::vector<std::size_t> target_ids;
  for (auto j : rest)
    for (std::size_t k = 0; k < registry_.hom(summand, j).dim(); ++k) target_ids.push_back(j);
  for (std::size_t i = targets.size(); i-- > 0;) {
    if (targets.size() <= 1) break;
    std::vector<Mat> span;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (k == i) continue;
      const auto& hs = registry_.hom(target_ids[k], target_ids[i]);
      for (const auto& g : hs.basis()) span.push_back(compose(g, comps[k]).flatten());
    }
    if (span.empty()) continue;
    Mat flat_i = comps[i].flatten();
    if (flat_i.rows() == 0) continue;
    if (in_column_span(Mat::hstack(span, alg_->field(), flat_i.rows()), flat_i)) {
      targets.erase(targets.begin() + static_cast<std::ptrdiff_t>(i));
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
      target_ids.erase(target_ids.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  std::set<std::size_t> fresh;
  if (!targets.empty()) {
    DirectSum target = direct_sum(alg_, targets);
    ModuleHom approx = hom_into_sum(target, comps);
    Module coker = cokernel(approx, target.sum).module;
    for (const auto& part : decompose(coker)) {
      auto id = registry_.intern(part);
      if (!std::binary_search(rest.begin(), rest.end(), id)) fresh.insert(id);
    }
  }
  if (fresh.size() > 1)
    throw TheoryViolation("left mutation produced " + std::to_string(fresh.size()) +
                          " new summands");

  SupportPair out;
  out.summands = rest;
  if (!fresh.empty()) out.summands.push_back(*fresh.begin());
  std::sort(out.summands.begin(), out.summands.end());
  out.support_complement = vanishing_vertices(registry_, out.summands, rank());

  if (out.summands.size() + out.support_complement.size() != rank())
    throw TheoryViolation("mutation broke |M| + |P| = n");
  if (check_invariants_ && !is_tau_rigid_set(out.summands))
    throw TheoryViolation("mutation result is not tau-rigid");
  return {out, *label};
}

ExchangeQuiver TauTiltingEngine::explore(const ExploreOptions& opts) {
  ExchangeQuiver q;
  std::map<SupportPair, std::size_t> index;
  auto add_vertex = [&](const SupportPair& p, std::size_t depth) {
    auto [it, inserted] = index.emplace(p, q.vertices.size());
    if (inserted) {
      q.vertices.push_back(p);
      q.depth.push_back(depth);
    }
    return std::make_pair(it->second, inserted);
  };
  std::deque<std::size_t> queue;
  queue.push_back(add_vertex(initial_pair(), 0).first);
  std::vector<std::size_t> unexpanded;
  bool truncated = false;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (q.depth[v] >= opts.max_depth || truncated) {
      unexpanded.push_back(v);
      continue;
    }
    SupportPair src = q.vertices[v];
    for (const auto& lab : mutable_summands(src)) {
      auto mut = left_mutate(src, lab.summand);
      auto [w, inserted] = add_vertex(mut.pair, q.depth[v] + 1);
      if (inserted) queue.push_back(w);
      q.arrows.push_back({v, w, lab.summand, mut.label});
      if (q.vertices.size() >= opts.max_vertices) truncated = true;
    }
  }
  q.complete = !truncated;
  for (auto v : unexpanded)
    if (!mutable_summands(q.vertices[v]).empty()) q.complete = false;
  return q;
}

std::vector<std::size_t> TauTiltingEngine::semibrick_of(const SupportPair& p) {
  std::vector<std::size_t> out;
  for (const auto& l : mutable_summands(p)) out.push_back(l.brick);
  return out;
}

std::vector<DualSummand> TauTiltingEngine::dual_pair(const SupportPair& p) {
  std::vector<DualSummand> out;
  std::size_t k = 0;
  for (auto id : p.summands) {
    DualSummand d{k++, std::nullopt, std::nullopt};
    if (auto v = registry_.projective_vertex(id)) {
      d.cosupport_vertex = *v;
    } else {
      d.module = registry_.intern(registry_.tau(id));
    }
    out.push_back(d);
  }
  for (auto v : p.support_complement)
    out.push_back({k++, registry_.intern(injective(alg_, v)), std::nullopt});
  return out;
}

std::vector<std::optional<std::size_t>> TauTiltingEngine::socle_labels(
    const std::vector<DualSummand>& dual) {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& d : dual) {
    if (!d.module) {
      out.push_back(std::nullopt);
      continue;
    }
    const Module& mk = registry_.module(*d.module);
    std::vector<ModuleHom> maps;
    for (const auto& e : dual) {
      if (!e.module || e.origin == d.origin) continue;
      const auto& hs = registry_.hom(*d.module, *e.module);
      maps.insert(maps.end(), hs.basis().begin(), hs.basis().end());
    }
    const auto& rad = registry_.end(*d.module).radical;
    maps.insert(maps.end(), rad.begin(), rad.end());
    Subfamily k = common_kernel(maps, mk);
    if (family_dim(k) == 0) out.push_back(std::nullopt);
    else out.push_back(registry_.intern(submodule(mk, k).module));
  }
  return out;
}

std::vector<std::size_t> TauTiltingEngine::cosemibrick_of(const SupportPair& p) {
  std::vector<std::size_t> out;
  for (const auto& l : socle_labels(dual_pair(p)))
    if (l) out.push_back(*l);
  return out;
}

std::vector<ShiftedBrick> TauTiltingEngine::smc_of(const SupportPair& p) {
  auto dual = dual_pair(p);
  auto socles = socle_labels(dual);
  std::vector<ShiftedBrick> out;
  for (std::size_t k = 0; k < dual.size(); ++k) {
    std::optional<std::size_t> top;
    if (k < p.summands.size()) top = top_label(p, p.summands[k]);
    if (top) {
      out.push_back({*top, false});
    } else if (socles[k]) {
      out.push_back({*socles[k], true});
    } else {
      throw TheoryViolation("silting summand with neither a top nor a socle brick");
    }
  }
  return out;
}

SupportPair TauTiltingEngine::bongartz_completion(const std::vector<std::size_t>& rigid) {
  if (!is_tau_rigid_set(rigid)) throw std::invalid_argument("module is not tau-rigid");
  std::vector<Module> reg_parts;
  for (std::size_t v = 0; v < rank(); ++v) reg_parts.push_back(projective(alg_, v));
  const Module regular = direct_sum(alg_, reg_parts).sum;

  // X = (P1'' -> P0'' + A) with P1'' -> A running over Hom_K(U, A[1]).
  std::vector<Module> sources, targets;
  struct Column {
    std::size_t copy;
    ModuleHom d;
    ModuleHom phi;
  };
  std::vector<Column> cols;
  for (auto id : rigid) {
    const auto& pres = registry_.presentation(id);
    if (pres.p1_vertices.empty()) continue;
    const Module& p1 = pres.p1.sum;
    const Module& p0 = pres.p0.sum;
    HomSpace h1 = hom_space(p1, regular);
    HomSpace h0 = hom_space(p0, regular);
    Mat img(alg_->field(), h1.dim(), h0.dim());
    for (std::size_t c = 0; c < h0.dim(); ++c) {
      auto co = h1.coordinates(compose(h0.basis()[c], pres.p1_to_p0));
      if (!co) throw TheoryViolation("restriction along the presentation failed");
      for (std::size_t r = 0; r < co->size(); ++r) img.set(r, c, (*co)[r]);
    }
    for (auto r : complement_coordinates(img)) {
      cols.push_back({targets.size(), pres.p1_to_p0, h1.basis()[r]});
      sources.push_back(p1);
      targets.push_back(p0);
    }
  }
  std::set<std::size_t> ids(rigid.begin(), rigid.end());
  std::vector<Module> all_targets = targets;
  all_targets.push_back(regular);
  DirectSum tgt = direct_sum(alg_, all_targets);
  Module h0;
  if (cols.empty()) {
    h0 = regular;
  } else {
    DirectSum src = direct_sum(alg_, sources);
    std::vector<ModuleHom> columns;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::vector<ModuleHom> parts;
      for (std::size_t t = 0; t < all_targets.size(); ++t) {
        if (t == cols[i].copy) parts.push_back(cols[i].d);
        else if (t + 1 == all_targets.size()) parts.push_back(cols[i].phi);
        else parts.push_back(zero_hom(sources[i], all_targets[t]));
      }
      columns.push_back(hom_into_sum(tgt, parts));
    }
    h0 = cokernel(hom_from_sum(src, columns), tgt.sum).module;
  }
  for (const auto& part : decompose(h0)) ids.insert(registry_.intern(part));
  SupportPair out;
  out.summands.assign(ids.begin(), ids.end());
  out.support_complement = vanishing_vertices(registry_, out.summands, rank());
  if (!is_support_tau_tilting(out))
    throw TheoryViolation("Bongartz completion is not support tau-tilting");
  return out;
}

ExchangeQuiver restrict_quiver(const ExchangeQuiver& q, const std::vector<std::size_t>& summands,
                               const std::vector<std::size_t>& complement) {
  ExchangeQuiver out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const auto& p = q.vertices[v];
    bool keep = std::includes(p.summands.begin(), p.summands.end(), summands.begin(),
                              summands.end());
    for (auto c : complement)
      keep = keep && std::binary_search(p.support_complement.begin(),
                                        p.support_complement.end(), c);
    if (!keep) continue;
    remap[v] = out.vertices.size();
    out.vertices.push_back(p);
    out.depth.push_back(q.depth[v]);
  }
  for (const auto& a : q.arrows) {
    auto s = remap.find(a.source), t = remap.find(a.target);
    if (s == remap.end() || t == remap.end()) continue;
    out.arrows.push_back({s->second, t->second, a.mutated, a.label});
  }
  out.complete = q.complete;
  return out;
}

}  // namespace taumut
