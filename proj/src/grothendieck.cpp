#include "taumut/grothendieck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "taumut/errors.hpp"

namespace taumut {

long determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Mat q(Field::rationals(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) q.set(i, k, m.at(i, k));
  mpq_class d = taumut::determinant(q).rational_value();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p())
    throw std::overflow_error("determinant out of range");
  return d.get_num().get_si();
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t;
  t.cols.assign(m.size(), std::vector<long>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) t.cols[i][k] = m.at(i, k);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix sizes differ");
  IntMatrix out;
  out.cols.assign(n, std::vector<long>(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out.cols[k][i] += a.at(i, j) * b.at(j, k);
  return out;
}

IntMatrix diagonal(const std::vector<long>& d) {
  IntMatrix out;
  out.cols.assign(d.size(), std::vector<long>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) out.cols[i][i] = d[i];
  return out;
}

std::vector<long> smith_form_of_diagonal(std::vector<long> d) {
  for (auto& x : d) x = std::labs(x);
  // Replacing (a, b) by (gcd, lcm) until each entry divides the next.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      long g = std::gcd(d[i], d[j]);
      long l = g == 0 ? 0 : d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

IntMatrix g_matrix(TauTiltingEngine& engine, const SupportPair& pair) {
  const std::size_t n = engine.rank();
  auto& reg = engine.registry();
  IntMatrix g;
  for (auto id : pair.summands) {
    std::vector<long> col(n, 0);
    const auto& pres = reg.presentation(id);
    for (auto v : pres.p0_vertices) ++col[v];
    for (auto v : pres.p1_vertices) --col[v];
    g.cols.push_back(std::move(col));
  }
  for (auto v : pair.support_complement) {
    std::vector<long> col(n, 0);
    col[v] = -1;
    g.cols.push_back(std::move(col));
  }
  if (g.size() != n) throw TheoryViolation("pair does not have n summands");
  return g;
}

CMatrix c_matrix(TauTiltingEngine& engine, const SupportPair& pair) {
  auto& reg = engine.registry();
  CMatrix out;
  for (const auto& sb : engine.smc_of(pair)) {
    const Module& b = reg.module(sb.brick);
    std::vector<long> col;
    for (auto d : b.dims()) col.push_back(sb.shifted ? -static_cast<long>(d) : static_cast<long>(d));
    out.c.cols.push_back(std::move(col));
    out.end_dims.push_back(static_cast<long>(reg.end(sb.brick).dim()));
  }
  if (out.c.size() != engine.rank()) throw TheoryViolation("collection does not have n members");
  return out;
}

std::vector<long> simple_end_dims(const AlgebraPtr& alg) {
  std::vector<long> d;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v)
    d.push_back(static_cast<long>(endomorphism_ring(simple(alg, v)).dim()));
  return d;
}

DualityReport check_duality(const IntMatrix& g, const CMatrix& c, const std::vector<long>& d) {
  DualityReport r;
  r.product_ok = multiply(multiply(transpose(g), diagonal(d)), c.c) == diagonal(c.end_dims);
  if (!r.product_ok) r.notes.push_back("G^T D C differs from D'");
  r.det_g = determinant(g);
  r.det_c = determinant(c.c);
  long prod_d = 1, prod_dp = 1;
  for (auto x : d) prod_d *= x;
  for (auto x : c.end_dims) prod_dp *= x;
  r.unimodular = std::labs(r.det_g) == 1 && std::labs(r.det_c) * prod_d == prod_dp;
  if (!r.unimodular) r.notes.push_back("determinants are not units");
  r.smith_equal = smith_form_of_diagonal(d) == smith_form_of_diagonal(c.end_dims);
  if (!r.smith_equal) r.notes.push_back("Smith forms of D and D' differ");
  auto a = d, b = c.end_dims;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  r.diagonal_mismatch = a != b;
  if (r.diagonal_mismatch) r.notes.push_back("D and D' differ");
  r.pairing_ok = true;
  return r;
}

DualityReport check_duality_at(TauTiltingEngine& engine, const SupportPair& pair) {
  auto& reg = engine.registry();
  auto r = check_duality(g_matrix(engine, pair), c_matrix(engine, pair),
                         simple_end_dims(engine.algebra()));
  auto smc = engine.smc_of(pair);
  const std::size_t m = pair.summands.size();
  for (std::size_t k = 0; k < smc.size(); ++k) {
    const Module& x = reg.module(smc[k].brick);
    bool paired;
    if (k >= m) {
      // P_v[1] against X[1]: Hom(P_v, X).
      paired = smc[k].shifted && x.dim_at(pair.support_complement[k - m]) != 0;
    } else if (!smc[k].shifted) {
      paired = reg.hom_dim(pair.summands[k], smc[k].brick) != 0;
    } else {
      // Hom(P_M, X[1]) is dual to Hom(X, tau M).
      paired = hom_dim(x, reg.tau(pair.summands[k])) != 0;
    }
    if (!paired) {
      r.pairing_ok = false;
      r.notes.push_back("summand " + std::to_string(k) + " is not paired with its brick");
    }
  }
  return r;
}

}  // namespace taumut
