#include "taumut/nakayama.hpp"

#include <map>
#include <stdexcept>

#include "taumut/endo.hpp"
#include "taumut/presets.hpp"

namespace taumut::nakayama {

std::string Shape::name() const {
  return std::string(kind == Kind::linear ? "A" : "B") + "_{" + std::to_string(n) + "," +
         std::to_string(l) + "}";
}

AlgebraSpec make_nakayama(const Shape& shape, Field f) {
  return shape.kind == Kind::linear ? presets::nakayama_linear(shape.n, shape.l, f)
                                    : presets::nakayama_cyclic(shape.n, shape.l, f);
}

Module uniserial(const AlgebraPtr& alg, const Shape& shape, std::size_t top, std::size_t length) {
  const std::size_t n = shape.n;
  if (top == 0 || top > n || length == 0) throw std::invalid_argument("bad uniserial parameters");
  if (length > shape.l) throw std::invalid_argument("uniserial longer than the Loewy bound");
  if (shape.kind == Kind::linear && top - 1 + length > n)
    throw std::invalid_argument("interval runs past the last vertex");
  // Basis x_0 .. x_{length-1}, x_k sitting at vertex top-1+k (mod n).
  std::vector<std::size_t> dims(n, 0), slot(length);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t v = (top - 1 + k) % n;
    slot[k] = dims[v]++;
  }
  const Field& f = alg->field();
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg->num_arrows(); ++a) {
    const auto& arr = alg->quiver().arrows[a];
    maps.emplace_back(f, dims[arr.target], dims[arr.source]);
  }
  for (std::size_t k = 0; k + 1 < length; ++k) {
    std::size_t v = (top - 1 + k) % n;
    // The arrow leaving vertex v is arrow number v in both presets.
    maps[v].set(slot[k + 1], slot[k], 1);
  }
  return Module(alg, std::move(dims), std::move(maps));
}

Module interval_module(const AlgebraPtr& alg, const Shape& shape, std::size_t u, std::size_t v) {
  if (u == 0 || v == 0 || u > shape.n || v > shape.n) throw std::invalid_argument("vertex out of range");
  std::size_t length;
  if (shape.kind == Kind::linear) {
    if (v < u) throw std::invalid_argument("linear interval must have u <= v");
    length = v - u + 1;
  } else {
    length = (v + shape.n - u) % shape.n + 1;
  }
  if (length > shape.l) throw std::invalid_argument("interval longer than the Loewy bound");
  return uniserial(alg, shape, u, length);
}

std::vector<Module> indecomposables(const AlgebraPtr& alg, const Shape& shape) {
  std::vector<Module> out;
  for (std::size_t u = 1; u <= shape.n; ++u)
    for (std::size_t len = 1; len <= shape.l; ++len) {
      if (shape.kind == Kind::linear && u - 1 + len > shape.n) break;
      out.push_back(uniserial(alg, shape, u, len));
    }
  return out;
}

std::vector<Module> enumerate_bricks(const AlgebraPtr& alg, const Shape& shape) {
  std::vector<Module> out;
  std::size_t max_len = shape.kind == Kind::linear ? shape.l : std::min(shape.l, shape.n);
  for (std::size_t u = 1; u <= shape.n; ++u)
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (shape.kind == Kind::linear && u - 1 + len > shape.n) break;
      Module m = uniserial(alg, shape, u, len);
      if (is_brick(m)) out.push_back(std::move(m));
    }
  return out;
}

mpz_class count_semibricks(const std::vector<Module>& bricks, std::size_t guard) {
  const std::size_t k = bricks.size();
  std::vector<std::vector<bool>> clash(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      clash[i][j] = clash[j][i] = hom_dim(bricks[i], bricks[j]) != 0 || hom_dim(bricks[j], bricks[i]) != 0;
  std::size_t visited = 0;
  std::vector<std::size_t> chosen;
  auto grow = [&](auto& self, std::size_t start) -> mpz_class {
    if (++visited > guard) throw std::length_error("semibrick search exceeded its guard");
    mpz_class total = 1;  // the current set itself
    for (std::size_t i = start; i < k; ++i) {
      bool ok = true;
      for (auto c : chosen) ok = ok && !clash[c][i];
      if (!ok) continue;
      chosen.push_back(i);
      total += self(self, i + 1);
      chosen.pop_back();
    }
    return total;
  };
  return grow(grow, 0);
}

mpz_class count_semibricks_bruteforce(const Shape& shape, std::size_t guard) {
  auto alg = build_algebra(make_nakayama(shape));
  return count_semibricks(enumerate_bricks(alg, shape), guard);
}

mpz_class catalan(std::size_t n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

namespace {

mpz_class a_at(std::map<std::pair<long, std::size_t>, mpz_class>& memo, long n, std::size_t l) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  auto key = std::make_pair(n, l);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  mpz_class v = 2 * a_at(memo, n - 1, l);
  for (std::size_t i = 2; i <= l && static_cast<long>(i) <= n; ++i)
    v += a_at(memo, static_cast<long>(i) - 2, l) * a_at(memo, n - static_cast<long>(i), l);
  memo.emplace(key, v);
  return v;
}

}  // namespace

mpz_class a_count(std::size_t n, std::size_t l) {
  if (l == 0) throw std::invalid_argument("l must be positive");
  static thread_local std::map<std::pair<long, std::size_t>, mpz_class> memo;
  return a_at(memo, static_cast<long>(n), l);
}

mpz_class b_count(std::size_t n, std::size_t l) {
  if (l == 0) throw std::invalid_argument("l must be positive");
  if (n == 0) throw std::invalid_argument("n must be positive");
  mpz_class v = 2 * a_count(n - 1, l);
  for (std::size_t i = 2; i <= l && i <= n; ++i) v += i * catalan(i - 1) * a_count(n - i, l);
  return v;
}

std::vector<mpz_class> characteristic_coefficients(std::size_t l) {
  if (l == 0) throw std::invalid_argument("l must be positive");
  std::vector<mpz_class> d{1, -2};
  for (std::size_t i = 2; i <= l; ++i) d.push_back(-catalan(i - 1));
  return d;
}

std::vector<mpz_class> complete_homogeneous(std::size_t l, std::size_t n_max) {
  auto d = characteristic_coefficients(l);
  // sum_i (-1)^i e_i h_{n-i} = 0 with e_i = (-1)^i d_i.
  std::vector<mpz_class> h{1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_class v = 0;
    for (std::size_t i = 1; i <= l && i <= n; ++i) v -= d[i] * h[n - i];
    h.push_back(v);
  }
  return h;
}

std::vector<mpz_class> power_sums(std::size_t l, std::size_t n_max) {
  auto d = characteristic_coefficients(l);
  // Newton: p_n = -sum_{i<n} d_i p_{n-i} - n d_n.
  std::vector<mpz_class> p{mpz_class(l)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    mpz_class v = 0;
    for (std::size_t i = 1; i < n && i <= l; ++i) v -= d[i] * p[n - i];
    if (n <= l) v -= mpz_class(n) * d[n];
    p.push_back(v);
  }
  return p;
}

bool verify_symmetric_identities(std::size_t l, std::size_t n_max) {
  auto h = complete_homogeneous(l, n_max);
  auto p = power_sums(l, n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    if (h[n] != a_count(n, l) || p[n] != b_count(n, l)) return false;
  return true;
}

namespace {

bool in_sub(const Module& x, const Module& co) {
  if (x.is_zero()) return true;
  HomSpace hs = hom_space(x, co);
  return family_dim(common_kernel(hs.basis(), x)) == 0;
}

}  // namespace

std::vector<std::size_t> torsion_pair_failures(TauTiltingEngine& engine, const ExchangeQuiver& q,
                                               const std::vector<Module>& indecomposables) {
  std::vector<std::size_t> bad;
  auto& reg = engine.registry();
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const auto& pair = q.vertices[v];
    Module m = engine.module_of(pair);
    std::vector<Module> co_parts;
    for (const auto& d : engine.dual_pair(pair))
      if (d.module) co_parts.push_back(reg.module(*d.module));
    Module co = direct_sum(engine.algebra(), co_parts).sum;
    std::vector<const Module*> torsion, free;
    bool ok = true;
    for (const auto& x : indecomposables) {
      bool in_t = in_fac(x, m);
      bool in_f = in_sub(x, co);
      // Sub M' is exactly the right perpendicular category of M.
      if (in_f != (hom_dim(m, x) == 0)) ok = false;
      if (in_t && in_f) ok = false;
      if (in_t) torsion.push_back(&x);
      if (in_f) free.push_back(&x);
      // Canonical sequence: x modulo its M-trace lies in Sub M'.
      if (!in_sub(quotient(x, trace_family(m, x)).module, co)) ok = false;
    }
    for (auto t : torsion)
      for (auto f : free) ok = ok && hom_dim(*t, *f) == 0;
    if (!ok) bad.push_back(v);
  }
  return bad;
}

}  // namespace taumut::nakayama
