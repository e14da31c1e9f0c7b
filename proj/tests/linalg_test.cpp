#include <gtest/gtest.h>

#include <random>

#include "mpart/linalg.hpp"

namespace mpart {
namespace {

TEST(SolveExact, Identity) {
  const std::vector<Rational> b{Rational(3, 7), -2, 0, Rational(5, 2)};
  EXPECT_EQ(solve_exact(RationalMatrix::identity(4), b), b);
}

TEST(SolveExact, TwoByTwo) {
  const RationalMatrix M{{1, 2}, {3, 4}};
  const auto x = solve_exact(M, {5, 6});
  EXPECT_EQ(x, (std::vector<Rational>{-4, Rational(9, 2)}));
}

TEST(SolveExact, SingularReportsRank) {
  const RationalMatrix M{{1, 2}, {2, 4}};
  try {
    solve_exact(M, {1, 1});
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.rank(), 1u);
  }
  const RationalMatrix Z{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  try {
    solve_exact(Z, {0, 0, 0});
    FAIL() << "expected SingularMatrixError";
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.rank(), 0u);
  }
}

TEST(SolveExact, NeedsPivoting) {
  const RationalMatrix M{{0, 1}, {1, 0}};
  EXPECT_EQ(solve_exact(M, {2, 3}), (std::vector<Rational>{3, 2}));
}

TEST(SolveExact, RejectsShapeMismatch) {
  RationalMatrix M(2, 3);
  EXPECT_THROW(solve_exact(M, {1, 2}), std::invalid_argument);
  EXPECT_THROW(solve_exact(RationalMatrix::identity(2), {1}), std::invalid_argument);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(RationalMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(RationalMatrix{{Rational(1, 2)}}), Rational(1, 2));
  EXPECT_EQ(determinant(RationalMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(RationalMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
}

// Cofactor expansion as an independent determinant.
Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    acc += (c % 2) ? -term : term;
  }
  return acc;
}

TEST(Determinant, RandomMatchesCofactorExpansion) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = make_rational(num(rng), den(rng));
    if (trial % 7 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) M(n - 1, j) = M(0, j) * 3;  // force singular
    EXPECT_EQ(determinant(M), cofactor_det(M));
  }
}

TEST(SolveExact, RandomSystemsHaveZeroResidual) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 8;
    RationalMatrix M(n, n);
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = make_rational(num(rng), den(rng));
      for (std::size_t j = 0; j < n; ++j) M(i, j) = make_rational(num(rng), den(rng));
    }
    if (determinant(M) == 0) {
      EXPECT_THROW(solve_exact(M, b), SingularMatrixError);
      continue;
    }
    EXPECT_EQ(M * solve_exact(M, b), b);
    ++solved;
  }
  EXPECT_GT(solved, 50);
}

}  // namespace
}  // namespace mpart
