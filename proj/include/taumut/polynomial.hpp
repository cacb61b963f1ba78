#pragma once

// Univariate polynomials over Q or F_p: just enough to find eigenvalues,
// coprime factors and irreducibility certificates for endomorphisms.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "taumut/exact_linalg.hpp"

namespace taumut {

class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);  // lowest degree first
  static Poly constant(Field f, const Scalar& c);
  static Poly x(Field f);
  static Poly linear_root(Field f, const Scalar& root);  // x - root

  const Field& field() const { return field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
// Monic gcd (zero if both are zero).
Poly poly_gcd(Poly a, Poly b);
Poly powmod(const Poly& base, const mpz_class& exp, const Poly& m);
// f / gcd(f, f'), monic.
Poly squarefree_part(const Poly& f);

// Distinct roots in the base field. Over Q by the rational root theorem
// (nullopt if the integer content is too large to enumerate divisors).
std::optional<std::vector<Scalar>> roots(const Poly& f);

// true / false when decidable; over Q only degrees <= 3 are certified.
std::optional<bool> is_irreducible(const Poly& f);

// For squarefree f, a monic factor g with 0 < deg g < deg f and
// gcd(g, f/g) = 1, or nullopt if none could be produced.
std::optional<Poly> coprime_factor(const Poly& f);

// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Mat& a);
// Evaluates p at a square matrix.
Mat eval_matrix(const Poly& p, const Mat& a);

}  // namespace taumut
