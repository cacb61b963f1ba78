#include <gtest/gtest.h>

#include "a3_fixtures.hpp"
#include "fixtures.hpp"
#include "taumut/presets.hpp"
#include "taumut/smc.hpp"

using namespace taumut;
using fixtures::dim_set;
using Set = std::set<std::string>;

namespace {

AlgebraPtr a_path(std::size_t n) { return build_algebra(presets::a_path(n)); }

TwoTermSMC simples_smc(const AlgebraPtr& alg) {
  TwoTermSMC x;
  for (std::size_t v = alg->num_vertices(); v-- > 0;) x.degree0.push_back(simple(alg, v));
  return x;
}

std::size_t index_of(const TwoTermSMC& x, const std::string& dims) {
  for (std::size_t k = 0; k < x.degree0.size(); ++k)
    if (x.degree0[k].dim_string() == dims) return k;
  throw std::logic_error("no such brick");
}

}  // namespace

TEST(SmcOfVertex, A3Collections) {
  TauTiltingEngine e(a_path(3));
  auto q = e.explore();
  for (const auto& f : fixtures::a3::vertices()) {
    std::optional<std::size_t> v;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
      if (dim_set(e, q.vertices[i].summands) == f.tilting) v = i;
    ASSERT_TRUE(v);
    auto x = smc_of_vertex(e, q.vertices[*v]);
    EXPECT_EQ(dim_set(x.degree0), f.degree0);
    EXPECT_EQ(dim_set(x.degree_minus1), f.shifted);
    EXPECT_TRUE(check_smc_axioms(x).ok());
  }
}

TEST(SmcAxioms, Examples) {
  auto alg = a_path(2);
  TwoTermSMC bad{{simple(alg, 0)}, {simple(alg, 0)}};
  auto r = check_smc_axioms(bad);
  EXPECT_FALSE(r.ok());

  TwoTermSMC good{{simple(alg, 0), simple(alg, 1)}, {}};
  EXPECT_NE(ext1_dim(simple(alg, 0), simple(alg, 1)), 0u);
  EXPECT_TRUE(check_smc_axioms(good).ok());

  TwoTermSMC short_one{{simple(alg, 0)}, {}};
  EXPECT_FALSE(check_smc_axioms(short_one).ok());
}

TEST(SmcMutate, A3Examples) {
  auto alg = a_path(3);
  auto x = simples_smc(alg);
  auto at3 = smc_left_mutate(x, index_of(x, "001"));
  EXPECT_EQ(dim_set(at3.degree0), (Set{"011", "100"}));
  EXPECT_EQ(dim_set(at3.degree_minus1), (Set{"001"}));

  auto at2 = smc_left_mutate(x, index_of(x, "010"));
  EXPECT_EQ(dim_set(at2.degree0), (Set{"001", "110"}));
  EXPECT_EQ(dim_set(at2.degree_minus1), (Set{"010"}));
}

TEST(SmcMutate, Field) {
  auto alg = a_path(1);
  auto out = smc_left_mutate(simples_smc(alg), 0);
  EXPECT_TRUE(out.degree0.empty());
  EXPECT_EQ(dim_set(out.degree_minus1), (Set{"1"}));
}

TEST(SmcMutate, ShiftedPartBecomesCokernel) {
  // Fixture vertex 2 -> 5 at 23: 3[1] turns into the cokernel 2 of 3 -> 23.
  auto alg = a_path(3);
  TauTiltingEngine e(alg);
  auto q = e.explore();
  auto p02 = e.left_mutate(e.initial_pair(), e.registry().intern(simple(alg, 2))).pair;
  auto x = smc_of_vertex(e, p02);
  auto y = smc_left_mutate(x, index_of(x, "011"));
  EXPECT_EQ(dim_set(y.degree0), (Set{"111", "010"}));
  EXPECT_EQ(dim_set(y.degree_minus1), (Set{"011"}));
}

TEST(SmcMutate, SelfExtensionGuard) {
  // Loop with x^2 = 0: the simple has a self-extension.
  AlgebraSpec s;
  s.vertices = {"1"};
  s.arrows = {{"x", "1", "1"}};
  s.relations = {{{"1", {"x", "x"}}}};
  s.nilpotency = 2;
  auto alg = build_algebra(s);
  TwoTermSMC x{{simple(alg, 0)}, {}};
  EXPECT_THROW(smc_left_mutate(x, 0), std::invalid_argument);
}

TEST(LabelCoincidence, SmallQuivers) {
  for (std::size_t n : {1u, 2u, 3u}) {
    TauTiltingEngine e(a_path(n));
    auto q = e.explore();
    auto r = check_label_coincidence(e, q);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.checked, q.arrows.size());
    EXPECT_EQ(r.skipped, 0u);
  }
}

TEST(LabelCoincidence, Preprojective) {
  TauTiltingEngine e(build_algebra(presets::preprojective_a(3)));
  auto q = e.explore();
  auto r = check_label_coincidence(e, q);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.checked + r.skipped, 36u);
}
