#include <gtest/gtest.h>

#include "taumut/endo.hpp"
#include "taumut/nakayama.hpp"

using namespace taumut;
using namespace taumut::nakayama;
using Dims = std::vector<std::size_t>;

namespace {

Shape lin(std::size_t n, std::size_t l) { return {Kind::linear, n, l}; }
Shape cyc(std::size_t n, std::size_t l) { return {Kind::cyclic, n, l}; }

}  // namespace

TEST(MakeNakayama, Shapes) {
  auto a32 = make_nakayama(lin(3, 2));
  EXPECT_EQ(a32.vertices.size(), 3u);
  EXPECT_EQ(a32.arrows.size(), 2u);
  EXPECT_EQ(a32.relations.size(), 1u);
  auto b22 = make_nakayama(cyc(2, 2));
  EXPECT_EQ(b22.arrows.size(), 2u);
  EXPECT_EQ(b22.relations.size(), 2u);
  // A_{n,l} with l >= n is the path algebra.
  EXPECT_EQ(build_algebra(make_nakayama(lin(3, 5)))->dimension(), 6u);
  EXPECT_EQ(build_algebra(make_nakayama(cyc(2, 2)))->dimension(), 4u);
}

TEST(IntervalModule, Examples) {
  auto a32 = build_algebra(make_nakayama(lin(3, 2)));
  EXPECT_EQ(interval_module(a32, lin(3, 2), 2, 2), simple(a32, 1));
  EXPECT_EQ(interval_module(a32, lin(3, 2), 1, 2).dims(), (Dims{1, 1, 0}));
  EXPECT_THROW(interval_module(a32, lin(3, 2), 1, 3), std::invalid_argument);

  auto b22 = build_algebra(make_nakayama(cyc(2, 2)));
  auto m = interval_module(b22, cyc(2, 2), 2, 1);
  EXPECT_EQ(m.dims(), (Dims{1, 1}));
  EXPECT_EQ(top_multiplicities(m), (Dims{0, 1}));
  EXPECT_TRUE(m.satisfies_relations());
}

TEST(Uniserial, Wrapping) {
  auto b23 = build_algebra(make_nakayama(cyc(2, 3)));
  auto m = uniserial(b23, cyc(2, 3), 1, 3);
  EXPECT_EQ(m.dims(), (Dims{2, 1}));
  EXPECT_TRUE(m.satisfies_relations());
  EXPECT_TRUE(is_indecomposable(m));
  EXPECT_FALSE(is_brick(m));
  EXPECT_EQ(indecomposables(b23, cyc(2, 3)).size(), 6u);
}

TEST(Bricks, Counts) {
  auto count = [](Shape s) {
    auto alg = build_algebra(make_nakayama(s));
    return enumerate_bricks(alg, s).size();
  };
  EXPECT_EQ(count(lin(3, 2)), 5u);
  EXPECT_EQ(count(cyc(2, 2)), 4u);
  EXPECT_EQ(count(lin(2, 2)), 3u);
}

TEST(Semibricks, BruteForce) {
  EXPECT_EQ(count_semibricks_bruteforce(lin(3, 2)), 12);
  EXPECT_EQ(count_semibricks_bruteforce(lin(2, 2)), 5);
  EXPECT_EQ(count_semibricks_bruteforce(cyc(3, 3)), 20);
  EXPECT_THROW(count_semibricks_bruteforce(lin(5, 5), 10), std::length_error);
}

TEST(Recurrence, PublishedValues) {
  EXPECT_EQ(a_count(7, 3), 694);
  EXPECT_EQ(a_count(5, 5), 132);
  EXPECT_EQ(a_count(5, 5), catalan(6));
  EXPECT_EQ(b_count(4, 3), 50);
  EXPECT_EQ(b_count(7, 5), 1920);
  EXPECT_EQ(b_count(4, 4), 70);
  EXPECT_EQ(a_count(0, 3), 1);
}

TEST(Recurrence, StableBelowTheBound) {
  for (std::size_t l = 1; l <= 7; ++l)
    for (std::size_t n = 1; n <= l; ++n) {
      EXPECT_EQ(a_count(n, l), a_count(n, n));
      EXPECT_EQ(a_count(n, l), catalan(n + 1));
      EXPECT_EQ(b_count(n, l), b_count(n, n));
      EXPECT_EQ(b_count(n, l), (n + 1) * catalan(n));
    }
}

TEST(SymmetricFunctions, NewtonIdentities) {
  EXPECT_EQ(power_sums(2, 1)[1], 2);
  EXPECT_EQ(power_sums(2, 1)[1], b_count(1, 2));
  auto h3 = complete_homogeneous(3, 7);
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(h3[n], a_count(n, 3));
  auto h1 = complete_homogeneous(1, 6), p1 = power_sums(1, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(h1[n], mpz_class(1) << n);
    EXPECT_EQ(p1[n], mpz_class(1) << n);
  }
  for (std::size_t l = 1; l <= 7; ++l) EXPECT_TRUE(verify_symmetric_identities(l, 7));
}

TEST(TorsionPairs, NakayamaWitness) {
  for (Shape s : {lin(3, 2), cyc(2, 2), cyc(3, 2), lin(4, 3)}) {
    auto alg = build_algebra(make_nakayama(s));
    TauTiltingEngine e(alg);
    auto q = e.explore();
    ASSERT_TRUE(q.complete);
    EXPECT_TRUE(torsion_pair_failures(e, q, indecomposables(alg, s)).empty()) << s.name();
  }
}

TEST(ThreeWay, SmallCases) {
  for (Shape s : {lin(3, 2), lin(4, 2), cyc(2, 2), cyc(3, 2), cyc(3, 3)}) {
    TauTiltingEngine e(build_algebra(make_nakayama(s)));
    auto q = e.explore();
    mpz_class rec = s.kind == Kind::linear ? a_count(s.n, s.l) : b_count(s.n, s.l);
    EXPECT_EQ(count_semibricks_bruteforce(s), rec) << s.name();
    EXPECT_EQ(mpz_class(q.vertices.size()), rec) << s.name();
  }
}
