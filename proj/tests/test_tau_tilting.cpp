#include <gtest/gtest.h>

#include <map>

#include "a3_fixtures.hpp"
#include "fixtures.hpp"
#include "taumut/presets.hpp"
#include "taumut/tau_tilting.hpp"

using namespace taumut;
using fixtures::dim_set;
using Set = std::set<std::string>;

namespace {

AlgebraPtr a_path(std::size_t n) { return build_algebra(presets::a_path(n)); }

std::optional<std::size_t> vertex_with(TauTiltingEngine& e, const ExchangeQuiver& q, const Set& dims) {
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (dim_set(e, q.vertices[v].summands) == dims) return v;
  return std::nullopt;
}

}  // namespace

TEST(InitialPair, Projectives) {
  TauTiltingEngine a2(a_path(2));
  auto p = a2.initial_pair();
  EXPECT_EQ(dim_set(a2, p.summands), (Set{"11", "01"}));
  EXPECT_TRUE(p.support_complement.empty());

  TauTiltingEngine k(a_path(1));
  EXPECT_EQ(dim_set(k, k.initial_pair().summands), (Set{"1"}));

  TauTiltingEngine a3(a_path(3));
  EXPECT_EQ(dim_set(a3, a3.initial_pair().summands), fixtures::a3::vertices()[0].tilting);
}

TEST(MutableSummands, Examples) {
  TauTiltingEngine a3(a_path(3));
  auto init = a3.initial_pair();
  std::vector<std::size_t> bricks;
  for (const auto& l : a3.mutable_summands(init)) bricks.push_back(l.brick);
  EXPECT_EQ(dim_set(a3, bricks), (Set{"100", "010", "001"}));

  SupportPair sink{{}, {0, 1, 2}};
  EXPECT_TRUE(a3.mutable_summands(sink).empty());

  auto alg2 = a_path(2);
  TauTiltingEngine a2(alg2);
  auto p = a2.make_pair({projective(alg2, 0), simple(alg2, 0)}, {});
  auto labels = a2.mutable_summands(p);
  ASSERT_EQ(labels.size(), 1u);
  EXPECT_EQ(a2.registry().module(labels[0].brick).dim_string(), "11");
}

TEST(LeftMutate, A2) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  auto init = e.initial_pair();
  auto p2 = e.registry().intern(projective(alg, 1));
  auto p1 = e.registry().intern(projective(alg, 0));

  auto at_p2 = e.left_mutate(init, p2);
  EXPECT_EQ(dim_set(e, at_p2.pair.summands), (Set{"11", "10"}));
  EXPECT_TRUE(at_p2.pair.support_complement.empty());
  EXPECT_EQ(e.registry().module(at_p2.label).dim_string(), "01");

  auto at_p1 = e.left_mutate(init, p1);
  EXPECT_EQ(dim_set(e, at_p1.pair.summands), (Set{"01"}));
  EXPECT_EQ(at_p1.pair.support_complement, (std::vector<std::size_t>{0}));
  EXPECT_EQ(e.registry().module(at_p1.label).dim_string(), "10");
}

TEST(LeftMutate, A3FirstArrow) {
  auto alg = a_path(3);
  TauTiltingEngine e(alg);
  auto s3 = e.registry().intern(simple(alg, 2));
  auto r = e.left_mutate(e.initial_pair(), s3);
  EXPECT_EQ(dim_set(e, r.pair.summands), fixtures::a3::vertices()[1].tilting);
  EXPECT_EQ(e.registry().module(r.label).dim_string(), "001");
}

TEST(LeftMutate, RejectsImmutableSummand) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  auto p = e.make_pair({projective(alg, 0), simple(alg, 0)}, {});
  auto s1 = e.registry().intern(simple(alg, 0));
  EXPECT_THROW(e.left_mutate(p, s1), std::invalid_argument);
}

TEST(Explore, Counts) {
  struct Case {
    const char* preset;
    std::size_t vertices, arrows;
  };
  // Vertex counts are Catalan numbers / the published preprojective count.
  for (const auto& c : {Case{"a-path:1", 2, 1}, Case{"a-path:2", 5, 5}, Case{"a-path:3", 14, 21},
                        Case{"preproj-a:3", 24, 36}}) {
    TauTiltingEngine e(build_algebra(presets::by_name(c.preset)));
    auto q = e.explore();
    EXPECT_TRUE(q.complete) << c.preset;
    EXPECT_EQ(q.vertices.size(), c.vertices) << c.preset;
    EXPECT_EQ(q.arrows.size(), c.arrows) << c.preset;
  }
}

TEST(Explore, DepthLimit) {
  TauTiltingEngine e(a_path(3));
  auto q0 = e.explore({0});
  EXPECT_EQ(q0.vertices.size(), 1u);
  EXPECT_TRUE(q0.arrows.empty());
  EXPECT_FALSE(q0.complete);
  auto q1 = e.explore({1});
  EXPECT_EQ(q1.vertices.size(), 4u);
  EXPECT_FALSE(q1.complete);
}

TEST(Explore, MatchesA3Fixture) {
  TauTiltingEngine e(a_path(3));
  auto q = e.explore();
  const auto& fv = fixtures::a3::vertices();
  std::vector<std::size_t> to_explored;
  for (const auto& v : fv) {
    auto idx = vertex_with(e, q, v.tilting);
    ASSERT_TRUE(idx.has_value());
    to_explored.push_back(*idx);
  }
  std::multiset<std::tuple<std::size_t, std::size_t, std::string>> got, want;
  for (const auto& a : q.arrows)
    got.insert({a.source, a.target, e.registry().module(a.label).dim_string()});
  for (const auto& a : fixtures::a3::arrows())
    want.insert({to_explored[a.source - 1], to_explored[a.target - 1], a.label});
  EXPECT_EQ(got, want);
}

TEST(Semibrick, A3FixtureVertex5) {
  auto alg = a_path(3);
  TauTiltingEngine e(alg);
  auto q = e.explore();
  auto v = vertex_with(e, q, fixtures::a3::vertices()[4].tilting);
  ASSERT_TRUE(v);
  EXPECT_EQ(dim_set(e, e.semibrick_of(q.vertices[*v])), (Set{"111", "010"}));
  EXPECT_TRUE(e.semibrick_of(SupportPair{{}, {0, 1, 2}}).empty());
  EXPECT_EQ(dim_set(e, e.semibrick_of(e.initial_pair())), (Set{"100", "010", "001"}));
}

TEST(DualPair, A3LowerQuiver) {
  TauTiltingEngine e(a_path(3));
  auto q = e.explore();
  const auto& fv = fixtures::a3::vertices();
  for (const auto& f : fv) {
    auto v = vertex_with(e, q, f.tilting);
    ASSERT_TRUE(v);
    std::vector<std::size_t> mods;
    for (const auto& d : e.dual_pair(q.vertices[*v]))
      if (d.module) mods.push_back(*d.module);
    EXPECT_EQ(dim_set(e, mods), f.cotilting);
    // Bold socle bricks of the lower quiver are the shifted collection part.
    EXPECT_EQ(dim_set(e, e.cosemibrick_of(q.vertices[*v])), f.shifted);
  }
}

TEST(DualPair, A2Example) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  auto p = e.make_pair({projective(alg, 0), simple(alg, 0)}, {});
  auto dual = e.dual_pair(p);
  std::vector<std::size_t> mods, cos;
  for (const auto& d : dual) {
    if (d.module) mods.push_back(*d.module);
    if (d.cosupport_vertex) cos.push_back(*d.cosupport_vertex);
  }
  EXPECT_EQ(dim_set(e, mods), (Set{"01"}));
  EXPECT_EQ(cos, (std::vector<std::size_t>{0}));
  EXPECT_EQ(dim_set(e, e.cosemibrick_of(p)), (Set{"01"}));

  auto init_dual = e.dual_pair(e.initial_pair());
  for (const auto& d : init_dual) EXPECT_FALSE(d.module.has_value());
  EXPECT_TRUE(e.cosemibrick_of(e.initial_pair()).empty());
  EXPECT_EQ(dim_set(e, e.cosemibrick_of(SupportPair{{}, {0, 1}})), (Set{"10", "01"}));
}

TEST(Bongartz, Examples) {
  auto alg = a_path(3);
  TauTiltingEngine e(alg);
  auto s2 = e.registry().intern(simple(alg, 1));
  auto t = e.bongartz_completion({s2});
  EXPECT_EQ(dim_set(e, t.summands), (Set{"011", "111", "010"}));
  EXPECT_EQ(e.bongartz_completion({}), e.initial_pair());
  EXPECT_EQ(e.bongartz_completion(e.initial_pair().summands), e.initial_pair());
  auto s1 = e.registry().intern(simple(alg, 0));
  // S1 is not tau-rigid together with S2: tau S1 = S2.
  EXPECT_THROW(e.bongartz_completion({s1, s2}), std::invalid_argument);
}

TEST(Bongartz, AgreesWithSubquiverSource) {
  // The completion is the source of the subquiver of pairs containing U.
  TauTiltingEngine e(build_algebra(presets::preprojective_a(3)));
  auto q = e.explore();
  std::set<std::size_t> rigid_ids;
  for (const auto& v : q.vertices) rigid_ids.insert(v.summands.begin(), v.summands.end());
  for (auto id : rigid_ids) {
    auto sub = restrict_quiver(q, {id});
    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < sub.vertices.size(); ++v)
      if (sub.in_arrows(v).empty()) sources.push_back(v);
    ASSERT_EQ(sources.size(), 1u);
    EXPECT_EQ(e.bongartz_completion({id}), sub.vertices[sources[0]]);
  }
}

TEST(Restrict, JassoExample) {
  auto alg = a_path(3);
  TauTiltingEngine e(alg);
  auto q = e.explore();
  auto s2 = e.registry().intern(simple(alg, 1));
  auto sub = restrict_quiver(q, {s2});
  EXPECT_EQ(sub.vertices.size(), 5u);
  EXPECT_EQ(sub.arrows.size(), 5u);
  for (std::size_t v = 0; v < sub.vertices.size(); ++v)
    EXPECT_EQ(sub.in_arrows(v).size() + sub.out_arrows(v).size(), 2u);

  EXPECT_EQ(restrict_quiver(q, {}).vertices.size(), 14u);
  auto whole = restrict_quiver(q, e.initial_pair().summands);
  EXPECT_EQ(whole.vertices.size(), 1u);
  EXPECT_TRUE(whole.arrows.empty());
}

TEST(Invariants, A3Quiver) {
  TauTiltingEngine e(a_path(3));
  auto q = e.explore();
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    EXPECT_TRUE(e.is_support_tau_tilting(q.vertices[v]));
    EXPECT_EQ(q.in_arrows(v).size() + q.out_arrows(v).size(), 3u);
    auto sb = e.semibrick_of(q.vertices[v]);
    EXPECT_EQ(sb.size(), q.out_arrows(v).size());
    std::sort(sb.begin(), sb.end());
    EXPECT_TRUE(seen.emplace(sb, v).second);
  }
  for (const auto& a : q.arrows) {
    const Module& s = e.registry().module(a.label);
    EXPECT_TRUE(in_fac(s, e.module_of(q.vertices[a.source])));
    EXPECT_EQ(hom_dim(e.module_of(q.vertices[a.target]), s), 0u);
  }
}
