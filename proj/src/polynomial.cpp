#include "taumut/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace taumut {

namespace {

constexpr std::uint64_t kBruteForceRootLimit = 5000;
const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^k) mod f by repeated p-th powers.
Poly frobenius_power(const Poly& f, std::size_t k) {
  const Field& fld = f.field();
  mpz_class p(static_cast<unsigned long>(fld.modulus()));
  Poly h = poly_mod(Poly::x(fld), f);
  for (std::size_t i = 0; i < k; ++i) h = powmod(h, p, f);
  return h;
}

std::optional<Poly> equal_degree_split(const Poly& f, std::size_t k) {
  const Field& fld = f.field();
  if (fld.modulus() == 2) return std::nullopt;
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(fld.modulus()),
                static_cast<unsigned long>(k));
  mpz_class e = (q - 1) / 2;
  Poly one = Poly::constant(fld, Scalar::one(fld));
  for (std::size_t shape = 1; shape < static_cast<std::size_t>(f.degree()); ++shape) {
    for (long a = 0; a < 64; ++a) {
      std::vector<Scalar> c(shape + 1, Scalar::zero(fld));
      c[shape] = Scalar::one(fld);
      c[0] = Scalar(fld, a);
      if (shape > 1) c[1] = Scalar(fld, a + 1);
      Poly t(fld, c);
      Poly g = poly_gcd(f, powmod(t, e, f) - one);
      if (g.degree() > 0 && g.degree() < f.degree()) return g;
    }
  }
  return std::nullopt;
}

void fp_roots(const Poly& f, std::vector<Scalar>& out) {
  const Field& fld = f.field();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    Poly m = f.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  auto g = equal_degree_split(f, 1);
  if (!g) throw std::runtime_error("root splitting failed over " + fld.name());
  fp_roots(*g, out);
  fp_roots(divmod(f, *g).quotient, out);
}

}  // namespace

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Field f, const Scalar& c) { return Poly(f, {c}); }

Poly Poly::x(Field f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::linear_root(Field f, const Scalar& root) { return Poly(f, {-root, Scalar::one(f)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

Scalar Poly::leading() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = c_.back().inverse();
  std::vector<Scalar> c = c_;
  for (auto& x : c) x = x * inv;
  return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly(field_);
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
  return Poly(field_, std::move(c));
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool unit = c_[i].is_one() && i > 0;
    if (!unit) out += c_[i].to_string();
    if (i > 0) out += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  std::vector<Scalar> q(std::max(0, a.degree() - db + 1), Scalar::zero(f));
  Scalar inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = r[i] * inv;
    if (c.is_zero()) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b.coeffs()[j];
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& m) { return divmod(a, m).remainder; }

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, const mpz_class& exp, const Poly& m) {
  const Field& f = base.field();
  Poly result = poly_mod(Poly::constant(f, Scalar::one(f)), m);
  Poly b = poly_mod(base, m);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mod(result * result, m);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = poly_mod(result * b, m);
  }
  return result;
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 0) return f.monic();
  Poly g = poly_gcd(f, f.derivative());
  return divmod(f, g).quotient.monic();
}

std::optional<std::vector<Scalar>> roots(const Poly& f) {
  const Field& fld = f.field();
  std::vector<Scalar> out;
  if (f.degree() <= 0) return out;
  if (!fld.is_rational()) {
    if (fld.modulus() <= kBruteForceRootLimit) {
      for (std::uint64_t a = 0; a < fld.modulus(); ++a) {
        Scalar s = Scalar::residue(fld, a);
        if (f.eval(s).is_zero()) out.push_back(s);
      }
      return out;
    }
    Poly lin = frobenius_power(f, 1) - Poly::x(fld);
    Poly g = poly_gcd(f, lin);
    fp_roots(g, out);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) {
      return a.residue_value() < b.residue_value();
    });
    return out;
  }
  // Clear denominators.
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c.rational_value() * l;
    ints.push_back(v.get_num());
  }
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) out.push_back(Scalar::zero(fld));
  if (ints.size() - low == 1) return out;
  mpz_class a0 = ints[low], an = ints.back();
  if (abs(a0) > kDivisorLimit || abs(an) > kDivisorLimit) return std::nullopt;
  std::vector<mpq_class> found;
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int sign : {1, -1}) {
        mpq_class cand(num * sign, den);
        cand.canonicalize();
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        Scalar s = Scalar::rational(cand);
        if (f.eval(s).is_zero()) found.push_back(cand);
      }
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& q : found) out.push_back(Scalar::rational(q));
  return out;
}

std::optional<bool> is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field& fld = f.field();
  if (fld.is_rational()) {
    auto rs = roots(f);
    if (!rs) return std::nullopt;
    if (!rs->empty()) return false;
    if (n <= 3) return true;
    return std::nullopt;
  }
  Poly m = f.monic();
  Poly x = Poly::x(fld);
  for (auto q : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = frobenius_power(m, static_cast<std::size_t>(n) / q) - poly_mod(x, m);
    if (poly_gcd(m, h).degree() != 0) return false;
  }
  return (frobenius_power(m, static_cast<std::size_t>(n)) - poly_mod(x, m)).is_zero();
}

std::optional<Poly> coprime_factor(const Poly& f) {
  const Field& fld = f.field();
  if (f.degree() <= 1) return std::nullopt;
  Poly m = f.monic();
  if (fld.is_rational()) {
    auto rs = roots(m);
    if (!rs || rs->empty()) return std::nullopt;
    return Poly::linear_root(fld, rs->front());
  }
  Poly rest = m;
  Poly h = poly_mod(Poly::x(fld), rest);
  mpz_class p(static_cast<unsigned long>(fld.modulus()));
  for (std::size_t k = 1; 2 * k <= static_cast<std::size_t>(rest.degree()) || k == 1; ++k) {
    h = powmod(h, p, m);
    Poly g = poly_gcd(m, h - Poly::x(fld));
    if (g.degree() > 0 && g.degree() < m.degree()) return g;
    if (g.degree() == m.degree()) {
      if (static_cast<std::size_t>(m.degree()) == k) return std::nullopt;
      return equal_degree_split(m, k);
    }
    if (k > static_cast<std::size_t>(m.degree())) break;
  }
  return std::nullopt;
}

Poly minimal_polynomial(const Mat& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Poly acc = Poly::constant(f, Scalar::one(f));
  for (std::size_t j = 0; j < n; ++j) {
    // Local minimal polynomial of e_j, skipped if it already kills e_j.
    Mat ej(f, n, 1);
    ej.set(j, 0, 1);
    if (eval_matrix(acc, a) * ej == Mat(f, n, 1)) continue;
    std::vector<Mat> krylov{ej};
    while (true) {
      Mat next = a * krylov.back();
      Mat k = Mat::hstack(krylov, f, n);
      auto c = solve(k, next);
      if (c) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < krylov.size(); ++i) coeffs.push_back(-c->at(i, 0));
        coeffs.push_back(Scalar::one(f));
        Poly local(f, std::move(coeffs));
        Poly g = poly_gcd(acc, local);
        acc = divmod(acc * local, g).quotient.monic();
        break;
      }
      krylov.push_back(std::move(next));
    }
  }
  return acc;
}

Mat eval_matrix(const Poly& p, const Mat& a) {
  const Field& f = a.field();
  Mat acc(f, a.rows(), a.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * a;
    if (!p.coeffs()[i].is_zero()) acc = acc + Mat::identity(f, a.rows()).scaled(p.coeffs()[i]);
  }
  return acc;
}

}  // namespace taumut
