#include <gtest/gtest.h>

#include "taumut/exact_linalg.hpp"

using namespace taumut;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

}  // namespace

TEST(Rref, RankDeficientOverQ) {
  auto r = rref(Mat::from_ints(Q, 2, 2, {2, 4, 1, 2}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, std::vector<std::size_t>{0});
}

TEST(Rref, IdentityHasFullPivots) {
  auto r = rref(Mat::identity(Q, 3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, FullRankOverF5) {
  EXPECT_EQ(rank(Mat::from_ints(F5, 2, 2, {1, 2, 3, 4})), 2u);
}

TEST(Rref, SingularModFive) {
  // det = 5 vanishes mod 5
  EXPECT_EQ(rank(Mat::from_ints(F5, 2, 2, {1, 2, 4, 13})), 1u);
  EXPECT_EQ(rank(Mat::from_ints(Q, 2, 2, {1, 2, 4, 13})), 2u);
}

TEST(Rref, Idempotent) {
  Mat m = Mat::from_ints(Q, {{1, 2, 3, 4}, {2, 4, 6, 9}, {0, 1, -1, 2}});
  auto once = rref(m);
  auto twice = rref(once.reduced);
  EXPECT_EQ(once.reduced, twice.reduced);
  EXPECT_EQ(once.pivot_cols, twice.pivot_cols);
}

TEST(Solve, ScalarOverF5) {
  auto x = solve(Mat::from_ints(F5, 1, 1, {2}), Mat::from_ints(F5, 1, 1, {3}));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->at(0, 0), Scalar::residue(4, 5));
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve(Mat::from_ints(Q, 1, 1, {0}), Mat::from_ints(Q, 1, 1, {1})));
}

TEST(Solve, IdentityReturnsRhs) {
  Mat v = Mat::from_ints(Q, 3, 1, {7, -1, 2});
  auto x = solve(Mat::identity(Q, 3), v);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, v);
}

TEST(Solve, RowMismatchThrows) {
  EXPECT_THROW(solve(Mat::identity(Q, 2), Mat(Q, 3, 1)), std::invalid_argument);
}

TEST(Solve, SolutionsPlusKernelStillSolve) {
  Mat m = Mat::from_ints(Q, {{1, 1, 0, 2}, {0, 1, 1, -1}});
  Mat rhs = Mat::from_ints(Q, 2, 1, {3, 5});
  auto x = solve(m, rhs);
  ASSERT_TRUE(x);
  EXPECT_EQ(m * *x, rhs);
  for (const auto& k : kernel_basis(m)) EXPECT_EQ(m * (*x + k), rhs);
}

TEST(Kernel, Shapes) {
  EXPECT_TRUE(kernel_basis(Mat::identity(Q, 3)).empty());
  EXPECT_EQ(kernel_basis(Mat(Q, 2, 3)).size(), 3u);
  auto k = kernel_basis(Mat::from_ints(Q, 1, 2, {1, 1}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].at(0, 0), -k[0].at(1, 0));
  EXPECT_FALSE(k[0].at(0, 0).is_zero());
}

TEST(Kernel, RankNullity) {
  for (const Field& f : {Q, F5}) {
    Mat m = Mat::from_ints(f, {{1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}, {1, 0, 1, 0, 1}});
    EXPECT_EQ(rank(m) + kernel_basis(m).size(), m.cols());
    EXPECT_TRUE((m * kernel_matrix(m)).is_zero());
  }
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(Mat::from_ints(Q, 2, 2, {1, 2, 3, 4})), Scalar(Q, -2));
  EXPECT_EQ(determinant(Mat::from_ints(F5, 2, 2, {1, 2, 3, 4})), Scalar(F5, 3));
}

TEST(Scalar, RationalParsing) {
  auto a = Scalar::parse(Q, "-3/6");
  EXPECT_EQ(a.to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse(F5, "1/2"), Scalar(F5, 3));
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field::prime(9), std::invalid_argument);
  EXPECT_EQ(Field::parse("fp:7").modulus(), 7u);
}
