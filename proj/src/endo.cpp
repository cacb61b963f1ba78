#include "taumut/endo.hpp"

#include <string>

#include "taumut/errors.hpp"
#include "taumut/polynomial.hpp"

namespace taumut {

namespace {

struct SplitResult {
  bool indecomposable = false;
  Subfamily first, second;
};

Poly hom_minimal_polynomial(const ModuleHom& f, const Field& fld) {
  Poly acc = Poly::constant(fld, Scalar::one(fld));
  for (const auto& c : f.components) {
    if (c.rows() == 0) continue;
    Poly local = minimal_polynomial(c);
    Poly g = poly_gcd(acc, local);
    acc = divmod(acc * local, g).quotient.monic();
  }
  return acc;
}

// Deterministic probe elements of End(M): the basis, pairwise combinations
// and two dense combinations.
std::vector<std::vector<Scalar>> probe_coefficients(std::size_t d, const Field& f) {
  std::vector<std::vector<Scalar>> out;
  auto unit = [&](std::size_t i) {
    std::vector<Scalar> c(d, Scalar::zero(f));
    c[i] = Scalar::one(f);
    return c;
  };
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit(i));
  for (long k : {1L, 2L, -1L, 3L})
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        auto c = unit(i);
        c[j] = Scalar(f, k);
        out.push_back(std::move(c));
      }
  std::vector<Scalar> lin(d, Scalar::zero(f)), quad(d, Scalar::zero(f));
  for (std::size_t i = 0; i < d; ++i) {
    lin[i] = Scalar(f, static_cast<long>(i + 1));
    quad[i] = Scalar(f, static_cast<long>((i + 1) * (i + 1) + 1));
  }
  out.push_back(lin);
  out.push_back(quad);
  return out;
}

SplitResult try_split(const Module& m) {
  SplitResult res;
  const Field& f = m.field();
  EndRing end = endomorphism_ring(m);
  if (end.semisimple_dim() == 1) {
    res.indecomposable = true;
    return res;
  }
  const std::size_t q = end.semisimple_dim();
  const std::size_t n = m.total_dim();
  for (const auto& coeffs : probe_coefficients(end.dim(), f)) {
    ModuleHom x = end.space.combination(coeffs);
    Poly mu = squarefree_part(hom_minimal_polynomial(x, f));
    if (mu.degree() < 1) continue;
    if (mu.degree() >= 2) {
      if (auto g = coprime_factor(mu)) {
        Subfamily ker, img;
        for (std::size_t v = 0; v < m.num_vertices(); ++v) {
          const Mat& comp = x.components[v];
          Mat y = eval_matrix(*g, comp);
          Mat yp = Mat::identity(f, comp.rows());
          for (std::size_t i = 0; i < n; ++i) yp = yp * y;
          ker.push_back(kernel_matrix(yp));
          img.push_back(column_space(yp));
        }
        if (family_dim(ker) == 0 || family_dim(img) == 0)
          throw TheoryViolation("Fitting decomposition degenerated");
        res.first = std::move(ker);
        res.second = std::move(img);
        return res;
      }
    }
    if (static_cast<std::size_t>(mu.degree()) == q) {
      auto irr = is_irreducible(mu);
      if (irr && *irr) {
        // K[x] is a field filling End/rad, so End is local.
        res.indecomposable = true;
        return res;
      }
    }
  }
  throw IndeterminateDecomposition("End/rad of dimension " + std::to_string(q) +
                                   " for dimension vector " + m.dim_string());
}

}  // namespace

Mat total_matrix(const ModuleHom& f) {
  Field fld = f.components.empty() ? Field() : f.components.front().field();
  return Mat::block_diagonal(f.components, fld);
}

EndRing endomorphism_ring(const Module& m) {
  EndRing out{hom_space(m, m), {}};
  const std::size_t d = out.space.dim();
  if (d <= 1) return out;
  const Field& f = m.field();
  if (!f.is_rational() && f.modulus() <= d)
    throw CharacteristicError("characteristic " + std::to_string(f.modulus()) +
                              " too small for an endomorphism ring of dimension " +
                              std::to_string(d));
  const auto& b = out.space.basis();
  // prod[i][j] = coordinates of b_i b_j
  std::vector<std::vector<std::vector<Scalar>>> prod(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = out.space.coordinates(compose(b[i], b[j]));
      if (!c) throw TheoryViolation("End(M) not closed under composition");
      prod[i][j] = std::move(*c);
    }
  std::vector<Scalar> trace(d, Scalar::zero(f));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) trace[k] = trace[k] + prod[k][i][i];
  Mat form(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = Scalar::zero(f);
      for (std::size_t k = 0; k < d; ++k) s = s + prod[i][j][k] * trace[k];
      form.set(i, j, s);
    }
  for (const auto& v : kernel_basis(form)) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(v.at(i, 0));
    out.radical.push_back(out.space.combination(c));
  }
  return out;
}

std::vector<ModuleHom> end_radical(const Module& m) { return endomorphism_ring(m).radical; }

bool is_brick(const Module& m) {
  if (m.is_zero()) return false;
  EndRing end = endomorphism_ring(m);
  if (end.dim() == 1) return true;
  if (!end.radical.empty()) return false;
  return try_split(m).indecomposable;
}

bool is_semibrick(const std::vector<Module>& bricks) {
  for (const auto& b : bricks)
    if (!is_brick(b)) return false;
  for (std::size_t i = 0; i < bricks.size(); ++i)
    for (std::size_t j = 0; j < bricks.size(); ++j)
      if (i != j && hom_dim(bricks[i], bricks[j]) != 0) return false;
  return true;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  return try_split(m).indecomposable;
}

std::vector<Module> decompose(const Module& m) {
  if (m.is_zero()) return {};
  SplitResult r = try_split(m);
  if (r.indecomposable) return {m};
  std::vector<Module> out;
  for (const auto& fam : {r.first, r.second}) {
    auto parts = decompose(submodule(m, fam).module);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

bool isomorphic_indecomposables(const Module& a, const Module& b) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  HomSpace ab = hom_space(a, b);
  if (ab.dim() == 0) return false;
  HomSpace ba = hom_space(b, a);
  const std::size_t n = b.total_dim();
  for (const auto& g : ba.basis())
    for (const auto& f : ab.basis())
      if (compose(f, g).rank() == n) return true;
  return false;
}

bool is_isomorphic(const Module& a, const Module& b) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  auto pa = decompose(a), pb = decompose(b);
  if (pa.size() != pb.size()) return false;
  std::vector<bool> used(pb.size(), false);
  for (const auto& x : pa) {
    bool matched = false;
    for (std::size_t j = 0; j < pb.size() && !matched; ++j) {
      if (used[j] || !isomorphic_indecomposables(x, pb[j])) continue;
      used[j] = true;
      matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace taumut
