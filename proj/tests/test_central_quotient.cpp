#include <gtest/gtest.h>

#include "taumut/central_quotient.hpp"
#include "taumut/endo.hpp"
#include "taumut/nakayama.hpp"
#include "taumut/presets.hpp"

using namespace taumut;

namespace {

AlgElem element(const AlgebraPtr& alg, const std::string& expr) {
  return alg->reduce(parse_path_expression(*alg, expr));
}

AlgebraPtr b23() { return build_algebra(presets::nakayama_cyclic(2, 3)); }

Module regular(const AlgebraPtr& alg) {
  std::vector<Module> parts;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) parts.push_back(projective(alg, v));
  return direct_sum(alg, parts).sum;
}

}  // namespace

TEST(CentralRadical, Examples) {
  auto b = b23();
  // Cyclic arrows a1: 1 -> 2 and a2: 2 -> 1.
  EXPECT_TRUE(is_central_radical(*b, element(b, "a1.a2")));
  EXPECT_TRUE(is_central_radical(*b, element(b, "a1.a2 + a2.a1")));
  auto a2 = build_algebra(presets::a_path(2));
  EXPECT_FALSE(is_central_radical(*a2, element(a2, "a1")));
  EXPECT_FALSE(is_central_radical(*a2, element(a2, "e:1")));
}

TEST(CentralRadical, LinearPathIsNotCentral) {
  auto a33 = build_algebra(presets::nakayama_linear(3, 3));
  auto z = element(a33, "a1.a2");
  EXPECT_FALSE(is_central_radical(*a33, z));
  EXPECT_THROW(CentralQuotient(a33, {z}), std::invalid_argument);
}

TEST(Quotient, CyclicToShorterLoewyLength) {
  auto b = b23();
  CentralQuotient q(b, {element(b, "a1.a2"), element(b, "a2.a1")});
  EXPECT_EQ(q.quotient()->dimension(), 4u);
  EXPECT_EQ(b->dimension(), 6u);
  auto b22 = build_algebra(presets::nakayama_cyclic(2, 2));
  EXPECT_EQ(q.quotient()->dimension(), b22->dimension());

  Module red = q.reduce(regular(b));
  EXPECT_TRUE(is_isomorphic(red, regular(q.quotient())));
}

TEST(Quotient, ZeroIdealIsIdentity) {
  auto b = b23();
  CentralQuotient q(b, {});
  EXPECT_EQ(q.quotient()->dimension(), b->dimension());
  for (auto& m : nakayama::indecomposables(b, {nakayama::Kind::cyclic, 2, 3}))
    EXPECT_EQ(q.reduce(m).dims(), m.dims());
}

TEST(Ejr, CyclicExample) {
  auto b = b23();
  CentralQuotient q(b, {element(b, "a1.a2"), element(b, "a2.a1")});
  auto r = verify_ejr(q);
  EXPECT_TRUE(r.ok()) << (r.notes.empty() ? "" : r.notes.front());
  EXPECT_EQ(r.source_vertices, 6u);
  EXPECT_EQ(r.quotient_vertices, 6u);
  EXPECT_EQ(r.source_arrows, r.quotient_arrows);
}

TEST(Ejr, ZeroIdeal) {
  auto a3 = build_algebra(presets::a_path(3));
  auto r = verify_ejr(CentralQuotient(a3, {}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.source_vertices, 14u);
}
