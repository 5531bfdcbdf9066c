#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "morphcoh/error.hpp"
#include "morphcoh/linalg.hpp"
#include "morphcoh/random_instances.hpp"

using namespace morphcoh;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ((Rational(1, 3) + Rational(2, 3)).str(), "1");
  EXPECT_EQ((Rational(1, 2) * Rational(2, 5)).str(), "1/5");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
}

TEST(Rational, ParseErrors) {
  EXPECT_EQ(kind_of([] { Rational::parse("1/0"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { Rational::parse("abc"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { Rational::parse(""); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { Rational::parse("1/"); }), ErrorKind::Parse);
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 80; ++i) x *= Rational(3);
  x /= Rational(2);
  EXPECT_EQ(x * Rational(2) / Rational(3), x * Rational(2, 3));
  EXPECT_EQ(Rational::parse(x.str()), x);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(Matrix::zero(3, 3)), 0u);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Matrix(0, 5)), 0u);
  EXPECT_EQ(rank(Matrix(5, 0)), 0u);
}

TEST(Kernel, Examples) {
  const Matrix k1 = kernel_basis(Matrix::identity(2));
  EXPECT_EQ(k1.rows(), 2u);
  EXPECT_EQ(k1.cols(), 0u);

  const Matrix k2 = kernel_basis(Matrix{{1, -1}});
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_EQ(k2(0, 0), k2(1, 0));
  EXPECT_FALSE(k2.is_zero());

  const Matrix k3 = kernel_basis(Matrix(0, 3));
  EXPECT_EQ(rank(k3), 3u);
  EXPECT_EQ(k3.rows(), 3u);
  EXPECT_EQ(k3.cols(), 3u);
}

TEST(Solve, Examples) {
  const auto x = solve(Matrix::identity(2), Matrix::column({3, 5}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, Matrix::column({3, 5}));

  const Matrix m{{1, -1}};
  const auto y = solve(m, Matrix::column({0}));
  ASSERT_TRUE(y);
  EXPECT_TRUE((m * *y).is_zero());

  EXPECT_FALSE(solve(Matrix{{1}, {0}}, Matrix::column({0, 1})));
}

TEST(Solve, ShapeMismatchIsAnError) {
  EXPECT_EQ(kind_of([] { solve(Matrix::identity(2), Matrix::column({1, 2, 3})); }), ErrorKind::Shape);
  EXPECT_EQ(kind_of([] { solve(Matrix::identity(2), Matrix::identity(2)); }), ErrorKind::Shape);
}

TEST(QuotientDim, Examples) {
  EXPECT_EQ(quotient_dim(Matrix::identity(3), Matrix(3, 0)), 3u);
  const Matrix full{{1, 2}, {3, 4}};
  EXPECT_EQ(quotient_dim(full, full), 0u);
  EXPECT_EQ(quotient_dim(Matrix::identity(2), Matrix::column({1, 1})), 1u);
  EXPECT_EQ(kind_of([] { quotient_dim(Matrix::column({1, 0}), Matrix::column({0, 1})); }),
            ErrorKind::SubspaceViolation);
}

TEST(Inverse, RoundTrip) {
  const Matrix m{{2, 1}, {1, 1}};
  const auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_EQ(determinant(m), Rational(1));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  EXPECT_EQ(determinant(Matrix{{1, 2}, {2, 4}}), Rational(0));
}

TEST(Kron, Shape) {
  const Matrix k = kron(Matrix{{1, 2}}, Matrix::identity(2));
  EXPECT_EQ(k, (Matrix{{1, 0, 2, 0}, {0, 1, 0, 2}}));
}

TEST(Vectorize, ColumnMajor) {
  const Matrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(m.vectorize(), Matrix::column({1, 3, 2, 4}));
  EXPECT_EQ(Matrix::unvectorize(m.vectorize(), 2, 2), m);
}

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RankNullityAndKernel) {
  random::Rng rng(GetParam());
  const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
  Matrix m = random::matrix(rng, r, c, 2);
  if (rng() % 2) {
    // force a dependency
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
  }
  const Matrix k = kernel_basis(m);
  EXPECT_EQ(rank(m) + k.cols(), c);
  EXPECT_EQ(rank(k), k.cols());
  EXPECT_TRUE((m * k).is_zero());
}

TEST_P(LinalgProperty, RankInvariantUnderPermutation) {
  random::Rng rng(GetParam() + 1000);
  const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
  const Matrix m = random::matrix(rng, r, c, 2);
  std::vector<std::size_t> rp(r), cp(c);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  Matrix p(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) p(i, j) = m(rp[i], cp[j]);
  }
  EXPECT_EQ(rank(p), rank(m));
}

TEST_P(LinalgProperty, SolveIsExact) {
  random::Rng rng(GetParam() + 2000);
  const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
  const Matrix m = random::matrix(rng, r, c);
  const Matrix x0 = random::matrix(rng, c, 1);
  const Matrix b = m * x0;
  const auto x = solve(m, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(m * *x, b);
  const RowEchelon e = rref(m);
  EXPECT_EQ(e.pivots.size(), rank(m));
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Range(0, 40));
