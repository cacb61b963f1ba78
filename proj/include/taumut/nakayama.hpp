#pragma once

// Nakayama algebras A_{n,l} (linear) and B_{n,l} (cyclic): uniserial modules,
// brick and semibrick enumeration, and the semibrick counting recurrences.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "taumut/module.hpp"
#include "taumut/tau_tilting.hpp"

namespace taumut::nakayama {

enum class Kind { linear, cyclic };

struct Shape {
  Kind kind = Kind::linear;
  std::size_t n = 1;
  std::size_t l = 1;
  std::string name() const;  // "A_{3,2}" style
};

AlgebraSpec make_nakayama(const Shape& shape, Field f = {});

// Uniserial module with top S_top and the given length (vertices 1-based).
// Over the cyclic quiver the composition factors may wrap around.
Module uniserial(const AlgebraPtr& alg, const Shape& shape, std::size_t top, std::size_t length);

// The uniserial module with top S_u and socle S_v. Throws
// std::invalid_argument when the interval is longer than the algebra allows.
Module interval_module(const AlgebraPtr& alg, const Shape& shape, std::size_t u, std::size_t v);

// Every indecomposable module (all uniserials of length <= l).
std::vector<Module> indecomposables(const AlgebraPtr& alg, const Shape& shape);

// Interval modules that pass is_brick.
std::vector<Module> enumerate_bricks(const AlgebraPtr& alg, const Shape& shape);

// Number of semibricks, the empty one included. Throws std::length_error when
// the search visits more than `guard` candidate sets.
mpz_class count_semibricks_bruteforce(const Shape& shape, std::size_t guard = 10'000'000);
// Same count from an explicit brick list.
mpz_class count_semibricks(const std::vector<Module>& bricks, std::size_t guard = 10'000'000);

mpz_class catalan(std::size_t n);
// a_{n,l} and b_{n,l} by the recurrences; a_count(0, l) = 1.
mpz_class a_count(std::size_t n, std::size_t l);
mpz_class b_count(std::size_t n, std::size_t l);

// Coefficients d_0..d_l of F_l: 1, -2, -c_1, ..., -c_{l-1}.
std::vector<mpz_class> characteristic_coefficients(std::size_t l);
// Complete homogeneous h_n and power sums p_n of the roots of F_l, n = 0..n_max.
std::vector<mpz_class> complete_homogeneous(std::size_t l, std::size_t n_max);
std::vector<mpz_class> power_sums(std::size_t l, std::size_t n_max);
// h_n = a_{n,l} and p_n = b_{n,l} for 1 <= n <= n_max.
bool verify_symmetric_identities(std::size_t l, std::size_t n_max);

// Torsion pair (Fac M, Sub M') at every vertex of q, M' the module part of
// the dual pair: Sub M' = M-perp on the given indecomposables, no overlap,
// Hom(Fac part, Sub part) = 0, and each X modulo its M-trace lies in Sub M'.
// Returns the ids of vertices that fail.
std::vector<std::size_t> torsion_pair_failures(TauTiltingEngine& engine, const ExchangeQuiver& q,
                                               const std::vector<Module>& indecomposables);

}  // namespace taumut::nakayama
