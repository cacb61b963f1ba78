#include "taumut/module.hpp"

#include <numeric>
#include <stdexcept>

namespace taumut {

namespace {

Mat unit_columns(const Field& f, std::size_t rows, const std::vector<std::size_t>& idx) {
  Mat e(f, rows, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) e.set(idx[j], j, 1);
  return e;
}

Mat inverse(const Mat& m) {
  auto x = solve(m, Mat::identity(m.field(), m.rows()));
  if (!x || m.rows() != m.cols()) throw std::logic_error("matrix is not invertible");
  return *x;
}

}  // namespace

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
  if (!alg_) throw std::invalid_argument("module without an algebra");
  if (dims_.size() != alg_->num_vertices())
    throw std::invalid_argument("dimension vector has the wrong length");
  if (maps_.size() != alg_->num_arrows())
    throw std::invalid_argument("wrong number of arrow matrices");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = alg_->quiver().arrows[a];
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
      throw std::invalid_argument("arrow matrix for " + arr.name + " has the wrong shape");
    if (!(maps_[a].field() == alg_->field()))
      throw std::invalid_argument("arrow matrix over the wrong field");
  }
}

Module Module::zero(AlgebraPtr alg) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  std::vector<Mat> maps(alg->num_arrows(), Mat(alg->field(), 0, 0));
  return Module(std::move(alg), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

std::vector<std::size_t> Module::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v]) out.push_back(v);
  return out;
}

std::string Module::dim_string() const {
  bool wide = false;
  for (auto d : dims_) wide |= d > 9;
  std::string out;
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    if (wide && v) out += ",";
    out += std::to_string(dims_[v]);
  }
  return out;
}

Mat Module::path_action(const Path& p) const {
  if (p.length() >= alg_->nilpotency()) return Mat(field(), dims_[p.target], dims_[p.source]);
  Mat acc = Mat::identity(field(), dims_[p.source]);
  for (auto a : p.arrows) acc = maps_[a] * acc;
  return acc;
}

Mat Module::element_action(const AlgElem& x, std::size_t v, std::size_t w) const {
  Mat acc(field(), dims_[w], dims_[v]);
  for (auto b : alg_->basis_between(v, w)) {
    if (x[b].is_zero()) continue;
    acc = acc + path_action(alg_->basis()[b]).scaled(x[b]);
  }
  return acc;
}

bool Module::satisfies_relations() const {
  for (const auto& g : alg_->generators()) {
    // Check each e_v g e_w component separately.
    std::map<std::pair<std::size_t, std::size_t>, Mat> parts;
    for (const auto& [c, p] : g) {
      auto key = std::make_pair(p.source, p.target);
      auto it = parts.find(key);
      if (it == parts.end())
        it = parts.emplace(key, Mat(field(), dims_[p.target], dims_[p.source])).first;
      it->second = it->second + path_action(p).scaled(c);
    }
    for (const auto& [k, m] : parts)
      if (!m.is_zero()) return false;
  }
  const auto n = alg_->nilpotency();
  for (const auto& p : alg_->path_space()) {
    if (p.length() + 1 != n) continue;
    Mat acc = Mat::identity(field(), dims_[p.source]);
    for (auto a : p.arrows) acc = maps_[a] * acc;
    for (std::size_t a = 0; a < alg_->num_arrows(); ++a) {
      if (alg_->quiver().arrows[a].source != p.target) continue;
      if (!(maps_[a] * acc).is_zero()) return false;
    }
  }
  return true;
}

bool Module::operator==(const Module& o) const {
  return alg_ == o.alg_ && dims_ == o.dims_ && maps_ == o.maps_;
}

// ---------------------------------------------------------------- homs

bool ModuleHom::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t ModuleHom::rank() const {
  std::size_t r = 0;
  for (const auto& c : components) r += taumut::rank(c);
  return r;
}

Mat ModuleHom::flatten() const {
  std::vector<Mat> parts;
  std::size_t total = 0;
  Field f = components.empty() ? Field() : components.front().field();
  for (const auto& c : components) {
    parts.push_back(c.vectorize());
    total += c.rows() * c.cols();
  }
  if (total == 0) return Mat(f, 0, 1);
  return Mat::vstack(parts, f, 1);
}

ModuleHom zero_hom(const Module& from, const Module& to) {
  ModuleHom h;
  for (std::size_t v = 0; v < from.num_vertices(); ++v)
    h.components.emplace_back(from.field(), to.dim_at(v), from.dim_at(v));
  return h;
}

ModuleHom identity_hom(const Module& m) {
  ModuleHom h;
  for (std::size_t v = 0; v < m.num_vertices(); ++v)
    h.components.push_back(Mat::identity(m.field(), m.dim_at(v)));
  return h;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  ModuleHom h;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    h.components.push_back(g.components[v] * f.components[v]);
  return h;
}

ModuleHom add(const ModuleHom& f, const ModuleHom& g) {
  ModuleHom h;
  for (std::size_t v = 0; v < f.components.size(); ++v)
    h.components.push_back(f.components[v] + g.components[v]);
  return h;
}

ModuleHom scale(const ModuleHom& f, const Scalar& s) {
  ModuleHom h;
  for (const auto& c : f.components) h.components.push_back(c.scaled(s));
  return h;
}

bool is_module_hom(const Module& from, const Module& to, const ModuleHom& f) {
  if (f.components.size() != from.num_vertices()) return false;
  for (std::size_t v = 0; v < from.num_vertices(); ++v) {
    if (f.components[v].rows() != to.dim_at(v) || f.components[v].cols() != from.dim_at(v))
      return false;
  }
  const auto& arrows = from.algebra()->quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto s = arrows[a].source, t = arrows[a].target;
    if (!(to.arrow_map(a) * f.components[s] == f.components[t] * from.arrow_map(a)))
      return false;
  }
  return true;
}

bool is_injective(const ModuleHom& f, const Module& from) {
  return f.rank() == from.total_dim();
}

bool is_surjective(const ModuleHom& f, const Module& to) {
  return f.rank() == to.total_dim();
}

bool is_isomorphism(const ModuleHom& f, const Module& from, const Module& to) {
  return from.dims() == to.dims() && is_injective(f, from);
}

HomSpace::HomSpace(Module from, Module to, std::vector<ModuleHom> basis)
    : from_(std::move(from)), to_(std::move(to)), basis_(std::move(basis)) {}

ModuleHom HomSpace::combination(const std::vector<Scalar>& coeffs) const {
  ModuleHom h = zero_hom(from_, to_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    h = add(h, scale(basis_[i], coeffs[i]));
  }
  return h;
}

void HomSpace::prepare() const {
  if (prepared_) return;
  const Field& f = from_.field();
  std::size_t len = 0;
  for (std::size_t v = 0; v < from_.num_vertices(); ++v) len += from_.dim_at(v) * to_.dim_at(v);
  Mat b(f, len, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) b.set_block(0, i, basis_[i].flatten());
  auto rr = rref(b.transpose());
  pivot_rows_ = rr.pivot_cols;
  solver_ = inverse(b.rows_subset(pivot_rows_));
  prepared_ = true;
}

std::optional<std::vector<Scalar>> HomSpace::coordinates(const ModuleHom& h) const {
  prepare();
  Mat flat = h.flatten();
  Mat x = solver_ * flat.rows_subset(pivot_rows_);
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < x.rows(); ++i) coeffs.push_back(x.at(i, 0));
  if (!(combination(coeffs) == h)) return std::nullopt;
  return coeffs;
}

HomSpace hom_space(const Module& from, const Module& to) {
  const Field& f = from.field();
  const std::size_t n = from.num_vertices();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + to.dim_at(v) * from.dim_at(v);
  const std::size_t unknowns = off[n];
  const auto& arrows = from.algebra()->quiver().arrows;

  std::size_t eqs = 0;
  for (const auto& arr : arrows) eqs += to.dim_at(arr.target) * from.dim_at(arr.source);
  Mat sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto s = arrows[a].source, t = arrows[a].target;
    const Mat& na = to.arrow_map(a);
    const Mat& ma = from.arrow_map(a);
    const std::size_t ns = to.dim_at(s), nt = to.dim_at(t), ms = from.dim_at(s),
                      mt = from.dim_at(t);
    for (std::size_t j = 0; j < ms; ++j) {
      for (std::size_t i = 0; i < nt; ++i, ++row) {
        // (N_a f_s)[i][j] - (f_t M_a)[i][j]
        for (std::size_t k = 0; k < ns; ++k)
          if (!na.entry_is_zero(i, k)) sys.add_to(row, off[s] + j * ns + k, na.at(i, k));
        for (std::size_t k = 0; k < mt; ++k)
          if (!ma.entry_is_zero(k, j)) sys.add_to(row, off[t] + k * nt + i, -ma.at(k, j));
      }
    }
  }
  Mat ker = kernel_matrix(sys);
  std::vector<ModuleHom> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    ModuleHom h;
    for (std::size_t v = 0; v < n; ++v) {
      Mat comp(f, to.dim_at(v), from.dim_at(v));
      for (std::size_t j = 0; j < from.dim_at(v); ++j)
        for (std::size_t i = 0; i < to.dim_at(v); ++i) {
          auto idx = off[v] + j * to.dim_at(v) + i;
          if (!ker.entry_is_zero(idx, c)) comp.set(i, j, ker.at(idx, c));
        }
      h.components.push_back(std::move(comp));
    }
    basis.push_back(std::move(h));
  }
  return HomSpace(from, to, std::move(basis));
}

std::size_t hom_dim(const Module& from, const Module& to) {
  return hom_space(from, to).dim();
}

// ---------------------------------------------------------------- families

Subfamily zero_family(const Module& m) {
  Subfamily s;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) s.emplace_back(m.field(), m.dim_at(v), 0);
  return s;
}

Subfamily full_family(const Module& m) {
  Subfamily s;
  for (std::size_t v = 0; v < m.num_vertices(); ++v)
    s.push_back(Mat::identity(m.field(), m.dim_at(v)));
  return s;
}

std::size_t family_dim(const Subfamily& s) {
  std::size_t d = 0;
  for (const auto& m : s) d += taumut::rank(m);
  return d;
}

Subfamily sum_families(const Subfamily& a, const Subfamily& b) {
  Subfamily out;
  for (std::size_t v = 0; v < a.size(); ++v)
    out.push_back(column_space(Mat::hstack({a[v], b[v]}, a[v].field(), a[v].rows())));
  return out;
}

Subfamily intersect_families(const Subfamily& a, const Subfamily& b) {
  Subfamily out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    Mat av = column_space(a[v]), bv = column_space(b[v]);
    Mat joint = Mat::hstack({av, -bv}, av.field(), av.rows());
    Mat k = kernel_matrix(joint);
    Mat top = k.block(0, 0, av.cols(), k.cols());
    out.push_back(column_space(av * top));
  }
  return out;
}

Subfamily generated_family(const Module& m, const Subfamily& gens) {
  Subfamily s;
  for (const auto& g : gens) s.push_back(column_space(g));
  const auto& arrows = m.algebra()->quiver().arrows;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      auto src = arrows[a].source, tgt = arrows[a].target;
      if (s[src].cols() == 0) continue;
      Mat img = m.arrow_map(a) * s[src];
      Mat joined = column_space(Mat::hstack({s[tgt], img}, m.field(), m.dim_at(tgt)));
      if (joined.cols() > s[tgt].cols()) {
        s[tgt] = std::move(joined);
        grew = true;
      }
    }
  }
  return s;
}

Subfamily radical_family(const Module& m) {
  Subfamily out;
  const auto& arrows = m.algebra()->quiver().arrows;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    std::vector<Mat> parts;
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].target == v) parts.push_back(m.arrow_map(a));
    if (parts.empty()) {
      out.emplace_back(m.field(), m.dim_at(v), 0);
    } else {
      out.push_back(column_space(Mat::hstack(parts, m.field(), m.dim_at(v))));
    }
  }
  return out;
}

Subfamily socle_family(const Module& m) {
  Subfamily out;
  const auto& arrows = m.algebra()->quiver().arrows;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    std::vector<Mat> parts;
    std::size_t rows = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].source == v) {
        parts.push_back(m.arrow_map(a));
        rows += m.arrow_map(a).rows();
      }
    if (parts.empty() || rows == 0) {
      out.push_back(Mat::identity(m.field(), m.dim_at(v)));
    } else {
      out.push_back(kernel_matrix(Mat::vstack(parts, m.field(), m.dim_at(v))));
    }
  }
  return out;
}

Subfamily image_family(const ModuleHom& f, const Module& to) {
  Subfamily out;
  for (std::size_t v = 0; v < to.num_vertices(); ++v) out.push_back(column_space(f.components[v]));
  return out;
}

Subfamily kernel_family(const ModuleHom& f, const Module& from) {
  Subfamily out;
  for (std::size_t v = 0; v < from.num_vertices(); ++v)
    out.push_back(kernel_matrix(f.components[v]));
  return out;
}

// ---------------------------------------------------------------- sub/quotient

Submodule submodule(const Module& m, const Subfamily& s) {
  const Field& f = m.field();
  Subfamily basis;
  std::vector<std::size_t> dims;
  for (const auto& sv : s) {
    basis.push_back(column_space(sv));
    dims.push_back(basis.back().cols());
  }
  const auto& arrows = m.algebra()->quiver().arrows;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto src = arrows[a].source, tgt = arrows[a].target;
    Mat img = m.arrow_map(a) * basis[src];
    if (dims[tgt] == 0) {
      if (!img.is_zero()) throw std::invalid_argument("subspace family is not a submodule");
      maps.emplace_back(f, 0, dims[src]);
      continue;
    }
    auto x = solve(basis[tgt], img);
    if (!x) throw std::invalid_argument("subspace family is not a submodule");
    maps.push_back(std::move(*x));
  }
  ModuleHom inc;
  inc.components = basis;
  return {Module(m.algebra(), std::move(dims), std::move(maps)), std::move(inc)};
}

Quotient quotient(const Module& m, const Subfamily& s) {
  const Field& f = m.field();
  std::vector<Mat> proj, lift;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    Mat sv = column_space(s[v]);
    auto comp = complement_coordinates(sv);
    Mat ec = unit_columns(f, m.dim_at(v), comp);
    Mat full = Mat::hstack({sv, ec}, f, m.dim_at(v));
    Mat inv = m.dim_at(v) ? inverse(full) : Mat(f, 0, 0);
    proj.push_back(inv.block(sv.cols(), 0, comp.size(), m.dim_at(v)));
    lift.push_back(ec);
    dims.push_back(comp.size());
  }
  const auto& arrows = m.algebra()->quiver().arrows;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto src = arrows[a].source, tgt = arrows[a].target;
    maps.push_back(proj[tgt] * m.arrow_map(a) * lift[src]);
  }
  ModuleHom p;
  p.components = std::move(proj);
  return {Module(m.algebra(), std::move(dims), std::move(maps)), std::move(p)};
}

Submodule kernel(const ModuleHom& f, const Module& from) {
  return submodule(from, kernel_family(f, from));
}

Quotient cokernel(const ModuleHom& f, const Module& to) {
  return quotient(to, image_family(f, to));
}

Submodule image(const ModuleHom& f, const Module& to) {
  return submodule(to, image_family(f, to));
}

// ---------------------------------------------------------------- sums

DirectSum direct_sum(AlgebraPtr alg, const std::vector<Module>& parts) {
  const Field& f = alg->field();
  const std::size_t n = alg->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim_at(v);
  const auto& arrows = alg->quiver().arrows;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    Mat m(f, dims[arrows[a].target], dims[arrows[a].source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.arrow_map(a));
      r += p.dim_at(arrows[a].target);
      c += p.dim_at(arrows[a].source);
    }
    maps.push_back(std::move(m));
  }
  DirectSum out{Module(alg, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    ModuleHom inj, pr;
    for (std::size_t v = 0; v < n; ++v) {
      Mat i(f, dims[v], p.dim_at(v));
      Mat q(f, p.dim_at(v), dims[v]);
      for (std::size_t k = 0; k < p.dim_at(v); ++k) {
        i.set(off[v] + k, k, 1);
        q.set(k, off[v] + k, 1);
      }
      inj.components.push_back(std::move(i));
      pr.components.push_back(std::move(q));
      off[v] += p.dim_at(v);
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(pr));
  }
  return out;
}

ModuleHom hom_into_sum(const DirectSum& target, const std::vector<ModuleHom>& parts) {
  ModuleHom h;
  const std::size_t n = target.sum.num_vertices();
  for (std::size_t v = 0; v < n; ++v) {
    Mat acc(target.sum.field(), target.sum.dim_at(v),
            parts.empty() ? 0 : parts.front().components[v].cols());
    for (std::size_t i = 0; i < parts.size(); ++i)
      acc = acc + target.injections[i].components[v] * parts[i].components[v];
    h.components.push_back(std::move(acc));
  }
  return h;
}

ModuleHom hom_from_sum(const DirectSum& source, const std::vector<ModuleHom>& parts) {
  ModuleHom h;
  const std::size_t n = source.sum.num_vertices();
  for (std::size_t v = 0; v < n; ++v) {
    Mat acc(source.sum.field(), parts.empty() ? 0 : parts.front().components[v].rows(),
            source.sum.dim_at(v));
    for (std::size_t i = 0; i < parts.size(); ++i)
      acc = acc + parts[i].components[v] * source.projections[i].components[v];
    h.components.push_back(std::move(acc));
  }
  return h;
}

// ---------------------------------------------------------------- standard modules

Module projective(const AlgebraPtr& alg, std::size_t v) {
  const Field& f = alg->field();
  const std::size_t n = alg->num_vertices();
  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = alg->basis_between(v, w).size();
  const auto& arrows = alg->quiver().arrows;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto s = arrows[a].source, t = arrows[a].target;
    Mat m(f, dims[t], dims[s]);
    Path ap{s, t, {a}};
    for (auto b : alg->basis_between(v, s)) {
      auto prod = alg->path_element(*alg->concat(alg->basis()[b], ap));
      for (auto c : alg->basis_between(v, t))
        if (!prod[c].is_zero()) m.set(alg->local_index(c), alg->local_index(b), prod[c]);
    }
    maps.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(maps));
}

Module injective(const AlgebraPtr& alg, std::size_t v) {
  const Field& f = alg->field();
  const std::size_t n = alg->num_vertices();
  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = alg->basis_between(w, v).size();
  const auto& arrows = alg->quiver().arrows;
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    auto s = arrows[a].source, t = arrows[a].target;
    // (phi . a)(y) = phi(a y) for y in e_t A e_v.
    Mat m(f, dims[t], dims[s]);
    Path ap{s, t, {a}};
    for (auto y : alg->basis_between(t, v)) {
      auto prod = alg->path_element(*alg->concat(ap, alg->basis()[y]));
      for (auto u : alg->basis_between(s, v))
        if (!prod[u].is_zero()) m.set(alg->local_index(y), alg->local_index(u), prod[u]);
    }
    maps.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(maps));
}

Module simple(const AlgebraPtr& alg, std::size_t v) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<Mat> maps;
  for (const auto& arr : alg->quiver().arrows)
    maps.emplace_back(alg->field(), dims[arr.target], dims[arr.source]);
  return Module(alg, std::move(dims), std::move(maps));
}

Module module_from_ints(const AlgebraPtr& alg, const std::vector<std::size_t>& dims,
                        const std::vector<std::vector<std::vector<long>>>& maps) {
  const auto& arrows = alg->quiver().arrows;
  if (maps.size() != arrows.size()) throw std::invalid_argument("wrong number of arrow matrices");
  std::vector<Mat> ms;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    Mat m(alg->field(), dims.at(arrows[a].target), dims.at(arrows[a].source));
    if (maps[a].size() != m.rows())
      throw std::invalid_argument("arrow matrix for " + arrows[a].name + " has the wrong shape");
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (maps[a][i].size() != m.cols())
        throw std::invalid_argument("arrow matrix for " + arrows[a].name + " has the wrong shape");
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, maps[a][i][j]);
    }
    ms.push_back(std::move(m));
  }
  return Module(alg, dims, std::move(ms));
}

}  // namespace taumut
