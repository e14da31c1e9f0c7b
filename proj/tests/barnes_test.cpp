#include <gtest/gtest.h>

#include <algorithm>

#include "mpart/barnes.hpp"
#include "test_support.hpp"

namespace mpart {
namespace {

// Direct enumeration of the multinomial Bernoulli sum over compositions of j.
Rational brute_bernoulli_barnes(const std::vector<std::uint64_t>& a, unsigned j) {
  const auto B = testing::bernoulli_by_series(j);
  Rational acc = 0;
  std::vector<unsigned> idx(a.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == a.size()) {
      idx[pos] = left;
      Integer denom = 1;
      Rational term = 1;
      for (std::size_t s = 0; s < a.size(); ++s) {
        denom *= testing::fact(idx[s]);
        Integer ap = 1;
        for (unsigned e = 0; e < idx[s]; ++e) ap *= static_cast<unsigned long>(a[s]);
        term *= B[idx[s]] * Rational(ap);
      }
      acc += term * Rational(testing::fact(j)) / Rational(denom);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      idx[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, j);
  return acc;
}

const std::vector<PartitionSpec>& battery() {
  static const std::vector<PartitionSpec> specs{{{1, 2}, 1}, {{1, 2}, 2},    {{2, 3}, 2},
                                                {{1, 2, 3}, 2}, {{1, 2}, 3}, {{3, 4, 6}, 1}};
  return specs;
}

TEST(BernoulliBarnes, Examples) {
  EXPECT_EQ(bernoulli_barnes({5, 7}, 0), 1);
  EXPECT_EQ(bernoulli_barnes({1, 1}, 1), -1);
  EXPECT_EQ(bernoulli_barnes({1, 2}, 2), Rational(11, 6));
}

TEST(BernoulliBarnes, MatchesEnumeration) {
  const std::vector<std::vector<std::uint64_t>> cases{{1, 2}, {1, 1, 2, 2}, {2, 3, 5}, {3, 4, 6}, {1, 1, 1}};
  for (const auto& a : cases)
    for (unsigned j = 0; j <= 10; ++j) EXPECT_EQ(bernoulli_barnes(a, j), brute_bernoulli_barnes(a, j));
}

TEST(BernoulliBarnes, SinglePartDegenerates) {
  for (std::uint64_t a1 : {1u, 2u, 5u})
    for (unsigned j = 0; j <= 15; ++j) {
      Integer p = 1;
      for (unsigned e = 0; e < j; ++e) p *= static_cast<unsigned long>(a1);
      EXPECT_EQ(bernoulli_barnes({a1}, j), bernoulli_number(j) * Rational(p));
    }
}

TEST(BernoulliBarnesGrouped, Examples) {
  EXPECT_EQ(bernoulli_barnes_grouped(PartitionSpec({4, 9}, 3), 0), 1);
  EXPECT_EQ(bernoulli_barnes_grouped(PartitionSpec({1}, 2), 1), -1);
  EXPECT_EQ(bernoulli_barnes_grouped(PartitionSpec({1, 2}, 2), 2), brute_bernoulli_barnes({1, 1, 2, 2}, 2));
}

TEST(BernoulliBarnesGrouped, EqualsDirectOnBattery) {
  for (const auto& spec : battery())
    for (unsigned j = 0; j <= 12; ++j)
      EXPECT_EQ(bernoulli_barnes_grouped(spec, j), bernoulli_barnes(expand_ak(spec), j)) << spec.to_string() << " j=" << j;
}

TEST(Delta, OneByOne) { EXPECT_EQ(delta_determinant(PartitionSpec({1}, 1)), Rational(1, 2)); }

TEST(Delta, DimensionAndLayout) {
  for (const auto& spec : battery()) {
    const auto M = delta_matrix(spec);
    EXPECT_EQ(M.rows(), spec.rk() * spec.D());
    EXPECT_EQ(M.cols(), spec.rk() * spec.D());
  }
  // a=(1,2), k=1: first row B_1(1/2)/1, B_1(1)/1, B_2(1/2)/2, B_2(1)/2
  const auto M = delta_matrix(PartitionSpec({1, 2}, 1));
  EXPECT_EQ(M(0, 0), Rational(0));
  EXPECT_EQ(M(0, 1), Rational(1, 2));
  EXPECT_EQ(M(0, 2), Rational(-1, 24));
  EXPECT_EQ(M(0, 3), Rational(1, 12));
  EXPECT_EQ(M(1, 1), Rational(1, 12));  // B_2(1)/2 on the second row
}

TEST(Delta, DependsOnlyOnRkAndD) {
  EXPECT_EQ(delta_determinant(PartitionSpec({2, 3}, 1)), delta_determinant(PartitionSpec({3, 2}, 1)));
  EXPECT_EQ(delta_determinant(PartitionSpec({1, 2}, 2)), delta_determinant(PartitionSpec({2, 2}, 2)));
  EXPECT_EQ(delta_determinant(PartitionSpec({1, 2, 3}, 1)), delta_determinant(PartitionSpec({3, 1, 2}, 1)));
}

TEST(Delta, ScaledSystemDeterminantRelation) {
  // D^{n+m} splits into a row scaling D^n and a column scaling D^m
  for (const auto& spec : battery()) {
    if (spec.rk() * spec.D() > 16) continue;
    const auto plain = determinant(delta_matrix(spec));
    const auto scaled = determinant(delta_matrix(spec, true));
    EXPECT_EQ(plain == 0, scaled == 0) << spec.to_string();
    // exact ratio: prod_n D^n * prod_columns D^m
    const unsigned R = spec.rk();
    const std::uint64_t size = R * spec.D();
    unsigned long exponent = 0;
    for (std::uint64_t n = 0; n < size; ++n) exponent += n;
    for (unsigned m = 0; m < R; ++m) exponent += m * spec.D();
    EXPECT_EQ(scaled, plain * pow(Rational(static_cast<unsigned long>(spec.D())), static_cast<unsigned>(exponent)));
  }
}

TEST(Dety, OneByOneWitness) {
  const auto rep = dety_reconstruct(PartitionSpec({1}, 1));
  EXPECT_EQ(rep.size, 1u);
  EXPECT_EQ(rep.delta, Rational(1, 2));
  EXPECT_EQ(rep.rhs, (std::vector<Rational>{Rational(-1, 2)}));
  ASSERT_TRUE(rep.solution.has_value());
  EXPECT_EQ(*rep.solution, (std::vector<Rational>{-1}));
  EXPECT_EQ(rep.reference, (std::vector<Rational>{1}));
  EXPECT_TRUE(rep.residual_zero);
  EXPECT_EQ(rep.verdict, DetyReport::Verdict::fail);
}

TEST(Dety, SolvedSystemsHaveZeroResidual) {
  for (const auto& spec : battery()) {
    const auto rep = dety_reconstruct(spec);
    EXPECT_EQ(rep.size, spec.rk() * spec.D());
    if (rep.delta != 0) {
      ASSERT_FALSE(rep.singular) << spec.to_string();
      EXPECT_TRUE(rep.residual_zero) << spec.to_string();
    } else {
      EXPECT_TRUE(rep.singular);
    }
  }
}

}  // namespace
}  // namespace mpart
