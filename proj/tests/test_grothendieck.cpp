#include <gtest/gtest.h>

#include "taumut/grothendieck.hpp"
#include "taumut/presets.hpp"

using namespace taumut;

namespace {

AlgebraPtr a_path(std::size_t n) { return build_algebra(presets::a_path(n)); }

IntMatrix cols(std::vector<std::vector<long>> c) { return IntMatrix{std::move(c)}; }

// Columns sorted so that comparisons ignore the summand order.
std::vector<std::vector<long>> sorted_cols(IntMatrix m) {
  std::sort(m.cols.begin(), m.cols.end());
  return m.cols;
}

}  // namespace

TEST(IntMatrix, Basics) {
  EXPECT_EQ(determinant(cols({{1, 0}, {1, -1}})), -1);
  EXPECT_EQ(determinant(cols({})), 1);
  EXPECT_EQ(multiply(cols({{1, 0}, {0, 1}}), cols({{2, 3}, {4, 5}})), cols({{2, 3}, {4, 5}}));
  EXPECT_EQ(transpose(cols({{1, 2}, {3, 4}})), cols({{1, 3}, {2, 4}}));
  EXPECT_EQ(smith_form_of_diagonal({2, 3}), (std::vector<long>{1, 6}));
  EXPECT_EQ(smith_form_of_diagonal({4, 2, 1}), (std::vector<long>{1, 2, 4}));
}

TEST(GMatrix, Examples) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  EXPECT_EQ(sorted_cols(g_matrix(e, e.initial_pair())), sorted_cols(cols({{1, 0}, {0, 1}})));
  EXPECT_EQ(sorted_cols(g_matrix(e, SupportPair{{}, {0, 1}})),
            sorted_cols(cols({{-1, 0}, {0, -1}})));
  auto p = e.make_pair({projective(alg, 0), simple(alg, 0)}, {});
  EXPECT_EQ(sorted_cols(g_matrix(e, p)), sorted_cols(cols({{1, 0}, {1, -1}})));
}

TEST(CMatrix, Examples) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  auto p = e.make_pair({projective(alg, 0), simple(alg, 0)}, {});
  auto c = c_matrix(e, p);
  EXPECT_EQ(sorted_cols(c.c), sorted_cols(cols({{1, 1}, {0, -1}})));
  EXPECT_EQ(c.end_dims, (std::vector<long>{1, 1}));

  TauTiltingEngine a3(a_path(3));
  EXPECT_EQ(sorted_cols(c_matrix(a3, a3.initial_pair()).c),
            sorted_cols(cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  EXPECT_EQ(sorted_cols(c_matrix(a3, SupportPair{{}, {0, 1, 2}}).c),
            sorted_cols(cols({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}})));
}

TEST(Duality, A2Pair) {
  auto alg = a_path(2);
  TauTiltingEngine e(alg);
  auto p = e.make_pair({projective(alg, 0), simple(alg, 0)}, {});
  auto g = g_matrix(e, p);
  auto c = c_matrix(e, p);
  EXPECT_EQ(multiply(transpose(g), c.c), diagonal({1, 1}));
  EXPECT_TRUE(check_duality_at(e, p).ok());
}

TEST(Duality, EveryVertex) {
  for (const char* name : {"a-path:2", "a-path:3", "preproj-a:3", "nakayama:cyclic:3:3"}) {
    TauTiltingEngine e(build_algebra(presets::by_name(name)));
    auto q = e.explore();
    for (const auto& v : q.vertices) {
      auto r = check_duality_at(e, v);
      EXPECT_TRUE(r.ok()) << name << (r.notes.empty() ? "" : ": " + r.notes.front());
      EXPECT_FALSE(r.diagonal_mismatch);
    }
  }
}

TEST(Duality, DetectsBrokenPairing) {
  IntMatrix g = cols({{1, 0}, {0, 1}});
  CMatrix c{cols({{0, 1}, {1, 0}}), {1, 1}};
  EXPECT_FALSE(check_duality(g, c, {1, 1}).product_ok);
}
