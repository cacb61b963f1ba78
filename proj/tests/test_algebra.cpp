#include <gtest/gtest.h>

#include "taumut/algebra.hpp"
#include "taumut/module.hpp"

using namespace taumut;

namespace {

AlgebraSpec linear_a3() {
  AlgebraSpec s;
  s.vertices = {"1", "2", "3"};
  s.arrows = {{"a", "1", "2"}, {"b", "2", "3"}};
  s.nilpotency = 3;
  return s;
}

AlgebraSpec preprojective_a3() {
  AlgebraSpec s;
  s.vertices = {"1", "2", "3"};
  s.arrows = {{"a1", "1", "2"}, {"b1", "2", "1"}, {"a2", "2", "3"}, {"b2", "3", "2"}};
  s.relations = {{{"1", {"a1", "b1"}}},
                 {{"1", {"b1", "a1"}}, {"-1", {"a2", "b2"}}},
                 {{"1", {"b2", "a2"}}}};
  s.nilpotency = 3;
  return s;
}

}  // namespace

TEST(Algebra, PathAlgebraOfA3) {
  auto alg = build_algebra(linear_a3());
  EXPECT_EQ(alg->dimension(), 6u);
  auto p1 = projective(alg, 0);
  EXPECT_EQ(p1.dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(projective(alg, 2).dims(), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(injective(alg, 2).dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(injective(alg, 0).dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_TRUE(p1.satisfies_relations());
  EXPECT_TRUE(injective(alg, 1).satisfies_relations());
}

TEST(Algebra, RadicalSquareZeroTruncation) {
  auto s = linear_a3();
  s.relations = {{{"1", {"a", "b"}}}};
  auto alg = build_algebra(s);
  EXPECT_EQ(alg->dimension(), 5u);
  EXPECT_EQ(projective(alg, 0).dims(), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Algebra, PreprojectiveA3Dimension) {
  auto alg = build_algebra(preprojective_a3());
  EXPECT_EQ(alg->dimension(), 10u);
  for (std::size_t v = 0; v < 3; ++v) {
    EXPECT_TRUE(projective(alg, v).satisfies_relations());
    EXPECT_TRUE(injective(alg, v).satisfies_relations());
  }
  // b1.a1 = a2.b2 in the quotient
  auto x = alg->reduce(parse_path_expression(*alg, "b1.a1 + -1*a2.b2"));
  EXPECT_TRUE(alg->is_zero(x));
  EXPECT_EQ(projective(alg, 1).dims(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Algebra, RejectsShortRelation) {
  auto s = linear_a3();
  s.relations = {{{"1", {"a"}}}};
  EXPECT_THROW(build_algebra(s), std::invalid_argument);
}

TEST(Algebra, RejectsNonParallelRelation) {
  auto s = preprojective_a3();
  s.relations = {{{"1", {"a1", "b1"}}, {"1", {"b1", "a1"}}}};
  EXPECT_THROW(build_algebra(s), std::invalid_argument);
}

TEST(Algebra, RejectsUndeclaredEndpoint) {
  auto s = linear_a3();
  s.arrows.push_back({"c", "3", "4"});
  EXPECT_THROW(build_algebra(s), std::invalid_argument);
}

TEST(AlgebraSpec, SerializationRoundTrip) {
  for (auto s : {linear_a3(), preprojective_a3()}) {
    s.field = Field::prime(7);
    auto text = s.serialize();
    auto back = AlgebraSpec::parse(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.serialize(), text);
  }
}

TEST(AlgebraSpec, MalformedInput) {
  EXPECT_THROW(AlgebraSpec::parse("{not json"), std::invalid_argument);
  EXPECT_THROW(AlgebraSpec::parse("{\"vertices\": [\"1\"]}"), std::invalid_argument);
}

TEST(Algebra, OppositeSwapsProjectivesAndInjectives) {
  auto alg = build_algebra(preprojective_a3());
  auto op = alg->opposite();
  EXPECT_EQ(op->dimension(), alg->dimension());
  for (std::size_t v = 0; v < 3; ++v)
    EXPECT_EQ(projective(op, v).dims(), injective(alg, v).dims());
}

TEST(Module, HomBetweenProjectivesMatchesPaths) {
  auto alg = build_algebra(preprojective_a3());
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t w = 0; w < 3; ++w)
      EXPECT_EQ(hom_dim(projective(alg, v), projective(alg, w)),
                alg->basis_between(w, v).size());
}

TEST(Module, KernelCokernelDimensions) {
  auto alg = build_algebra(linear_a3());
  auto p1 = projective(alg, 0), p2 = projective(alg, 1);
  auto hs = hom_space(p2, p1);
  ASSERT_EQ(hs.dim(), 1u);
  const auto& f = hs.basis()[0];
  EXPECT_TRUE(is_module_hom(p2, p1, f));
  EXPECT_TRUE(is_injective(f, p2));
  auto c = cokernel(f, p1);
  EXPECT_EQ(c.module.dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_TRUE(is_module_hom(p1, c.module, c.projection));
  EXPECT_TRUE(kernel(f, p2).module.is_zero());
}

TEST(Module, DirectSumAndRadical) {
  auto alg = build_algebra(linear_a3());
  auto ds = direct_sum(alg, {projective(alg, 0), simple(alg, 1)});
  EXPECT_EQ(ds.sum.dims(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(family_dim(radical_family(ds.sum)), 2u);
  EXPECT_EQ(family_dim(socle_family(ds.sum)), 2u);
  EXPECT_EQ(hom_dim(ds.sum, ds.sum), 2u);
}
