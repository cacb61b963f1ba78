#include "taumut/homological.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "taumut/errors.hpp"

namespace taumut {

namespace {

// Unit vectors of m_v spanning a complement of rad(m)_v, for every v.
std::vector<std::pair<std::size_t, Mat>> top_generators(const Module& m) {
  std::vector<std::pair<std::size_t, Mat>> out;
  Subfamily rad = radical_family(m);
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    for (auto c : complement_coordinates(rad[v])) {
      Mat e(m.field(), m.dim_at(v), 1);
      e.set(c, 0, 1);
      out.emplace_back(v, std::move(e));
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> top_multiplicities(const Module& m) {
  std::vector<std::size_t> mult(m.num_vertices(), 0);
  Subfamily rad = radical_family(m);
  for (std::size_t v = 0; v < m.num_vertices(); ++v) mult[v] = m.dim_at(v) - rad[v].cols();
  return mult;
}

ModuleHom hom_from_projective(std::size_t v, const Module& x, const Mat& image) {
  const auto& alg = x.algebra();
  ModuleHom h;
  for (std::size_t w = 0; w < x.num_vertices(); ++w) {
    const auto& paths = alg->basis_between(v, w);
    Mat comp(x.field(), x.dim_at(w), paths.size());
    for (auto b : paths) comp.set_block(0, alg->local_index(b), x.path_action(alg->basis()[b]) * image);
    h.components.push_back(std::move(comp));
  }
  return h;
}

Presentation minimal_presentation(const Module& m) {
  const auto& alg = m.algebra();
  Presentation pres;
  auto gens = top_generators(m);
  std::vector<Module> p0_parts;
  for (const auto& [v, e] : gens) {
    pres.p0_vertices.push_back(v);
    p0_parts.push_back(projective(alg, v));
  }
  pres.p0 = direct_sum(alg, p0_parts);
  {
    std::vector<ModuleHom> parts;
    for (std::size_t i = 0; i < gens.size(); ++i)
      parts.push_back(hom_from_projective(gens[i].first, m, gens[i].second));
    pres.p0_to_m = hom_from_sum(pres.p0, parts);
    if (gens.empty()) pres.p0_to_m = zero_hom(pres.p0.sum, m);
  }
  pres.syzygy = kernel(pres.p0_to_m, pres.p0.sum);

  const Module& omega = pres.syzygy.module;
  auto kgens = top_generators(omega);
  std::vector<Module> p1_parts;
  std::vector<ModuleHom> d_parts;
  pres.entries.assign(gens.size(), {});
  for (const auto& [v, e] : kgens) {
    pres.p1_vertices.push_back(v);
    p1_parts.push_back(projective(alg, v));
    Mat k = pres.syzygy.inclusion.components[v] * e;  // in (P0)_v
    d_parts.push_back(hom_from_projective(v, pres.p0.sum, k));
    // Split k along the summands of P0.
    Mat local = k;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Mat piece = pres.p0.projections[i].components[v] * local;
      AlgElem y = alg->zero_element();
      const auto& paths = alg->basis_between(gens[i].first, v);
      for (auto b : paths) y[b] = piece.at(alg->local_index(b), 0);
      pres.entries[i].push_back(std::move(y));
    }
  }
  pres.p1 = direct_sum(alg, p1_parts);
  pres.p1_to_p0 = d_parts.empty() ? zero_hom(pres.p1.sum, pres.p0.sum)
                                  : hom_from_sum(pres.p1, d_parts);
  return pres;
}

NakayamaImage nakayama_of_presentation(const Presentation& pres) {
  const auto& alg = pres.p0.sum.algebra();
  const Field& f = alg->field();
  std::vector<Module> src_parts, tgt_parts;
  for (auto v : pres.p1_vertices) src_parts.push_back(injective(alg, v));
  for (auto w : pres.p0_vertices) tgt_parts.push_back(injective(alg, w));
  NakayamaImage out{direct_sum(alg, src_parts), direct_sum(alg, tgt_parts), {}};
  std::vector<ModuleHom> columns;
  for (std::size_t j = 0; j < pres.p1_vertices.size(); ++j) {
    std::vector<ModuleHom> comps;
    const std::size_t vj = pres.p1_vertices[j];
    for (std::size_t i = 0; i < pres.p0_vertices.size(); ++i) {
      const std::size_t wi = pres.p0_vertices[i];
      const AlgElem& y = pres.entries[i][j];
      ModuleHom h;
      for (std::size_t x = 0; x < alg->num_vertices(); ++x) {
        const auto& zs = alg->basis_between(x, wi);
        const auto& us = alg->basis_between(x, vj);
        Mat comp(f, zs.size(), us.size());
        for (auto z : zs) {
          AlgElem zy = alg->multiply(alg->path_element(alg->basis()[z]), y);
          for (auto u : us)
            if (!zy[u].is_zero()) comp.set(alg->local_index(z), alg->local_index(u), zy[u]);
        }
        h.components.push_back(std::move(comp));
      }
      comps.push_back(std::move(h));
    }
    // I_{vj} -> sum_i I_{wi}
    columns.push_back(hom_into_sum(out.target, comps));
  }
  out.map = columns.empty() ? zero_hom(out.source.sum, out.target.sum)
                            : hom_from_sum(out.source, columns);
  if (!is_module_hom(out.source.sum, out.target.sum, out.map))
    throw TheoryViolation("Nakayama image is not a homomorphism");
  return out;
}

Module tau(const Module& m) {
  if (m.is_zero()) return m;
  auto pres = minimal_presentation(m);
  if (pres.p1_vertices.empty()) return Module::zero(m.algebra());
  auto nu = nakayama_of_presentation(pres);
  return kernel(nu.map, nu.source.sum).module;
}

AlgebraPtr opposite_of(const AlgebraPtr& alg) {
  static std::mutex mu;
  static std::map<const Algebra*, std::pair<std::weak_ptr<const Algebra>, AlgebraPtr>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(alg.get());
  if (it != cache.end()) {
    if (auto live = it->second.first.lock(); live && live == alg) return it->second.second;
    cache.erase(it);
  }
  auto op = alg->opposite();
  cache[alg.get()] = {alg, op};
  return op;
}

Module dual_module(const Module& m, const AlgebraPtr& target) {
  if (target->num_arrows() != m.algebra()->num_arrows() ||
      target->num_vertices() != m.num_vertices())
    throw std::invalid_argument("duality target is not the opposite algebra");
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < m.algebra()->num_arrows(); ++a) {
    const auto& x = m.algebra()->quiver().arrows[a];
    const auto& y = target->quiver().arrows[a];
    if (x.source != y.target || x.target != y.source)
      throw std::invalid_argument("duality target is not the opposite algebra");
    maps.push_back(m.arrow_map(a).transpose());
  }
  return Module(target, m.dims(), std::move(maps));
}

Module tau_inverse(const Module& m) {
  if (m.is_zero()) return m;
  auto op = opposite_of(m.algebra());
  return dual_module(tau(dual_module(m, op)), m.algebra());
}

ExtClasses ext1_classes(const Module& m, const Module& n) {
  ExtClasses out{minimal_presentation(m), {}};
  const auto& omega = out.pres.syzygy;
  HomSpace h_omega = hom_space(omega.module, n);
  if (h_omega.dim() == 0) return out;
  HomSpace h_p0 = hom_space(out.pres.p0.sum, n);
  Mat img(n.field(), h_omega.dim(), h_p0.dim());
  for (std::size_t k = 0; k < h_p0.dim(); ++k) {
    auto c = h_omega.coordinates(compose(h_p0.basis()[k], omega.inclusion));
    if (!c) throw TheoryViolation("restriction left Hom(syzygy, N)");
    for (std::size_t i = 0; i < c->size(); ++i) img.set(i, k, (*c)[i]);
  }
  for (auto i : complement_coordinates(img)) out.classes.push_back(h_omega.basis()[i]);
  return out;
}

std::size_t ext1_dim(const Module& m, const Module& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  auto pres = minimal_presentation(m);
  const auto& omega = pres.syzygy;
  HomSpace h_omega = hom_space(omega.module, n);
  if (h_omega.dim() == 0) return 0;
  HomSpace h_p0 = hom_space(pres.p0.sum, n);
  std::vector<Mat> flat;
  for (const auto& g : h_p0.basis()) flat.push_back(compose(g, omega.inclusion).flatten());
  if (flat.empty()) return h_omega.dim();
  std::size_t len = flat.front().rows();
  return h_omega.dim() - rank(Mat::hstack(flat, n.field(), len));
}

Subfamily trace_family(const Module& u, const Module& x) {
  Subfamily acc = zero_family(x);
  HomSpace hs = hom_space(u, x);
  for (const auto& f : hs.basis()) acc = sum_families(acc, image_family(f, x));
  return acc;
}

bool in_fac(const Module& x, const Module& u) {
  return family_dim(trace_family(u, x)) == x.total_dim();
}

bool is_tau_rigid(const Module& m) { return hom_dim(m, tau(m)) == 0; }

bool is_tau_rigid_pair(const Module& m, const std::vector<std::size_t>& projective_vertices) {
  for (auto v : projective_vertices)
    if (m.dim_at(v) != 0) return false;
  return is_tau_rigid(m);
}

}  // namespace taumut
