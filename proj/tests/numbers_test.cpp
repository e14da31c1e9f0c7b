#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "mpart/numbers.hpp"
#include "test_support.hpp"

namespace mpart {
namespace {

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli_number(0), 1);
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_number(3), 0);
  EXPECT_EQ(bernoulli_number(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(Bernoulli, AgreesWithGeneratingFunctionInverse) {
  const auto expected = testing::bernoulli_by_series(60);
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(bernoulli_number(n), expected[n]) << "n=" << n;
}

TEST(Bernoulli, DefiningRecurrenceHolds) {
  for (unsigned n = 1; n <= 40; ++n) {
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += Rational(testing::choose(n + 1, k)) * bernoulli_number(k);
    EXPECT_EQ(acc, 0) << "n=" << n;
  }
}

TEST(Bernoulli, OddIndicesVanish) {
  for (unsigned n = 3; n <= 51; n += 2) EXPECT_EQ(bernoulli_number(n), 0);
}

TEST(BernoulliPolynomial, Examples) {
  EXPECT_EQ(bernoulli_polynomial(0, Rational(7, 3)), 1);
  EXPECT_EQ(bernoulli_polynomial(1, 1), Rational(1, 2));
  EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 2)), Rational(-1, 12));
}

TEST(BernoulliPolynomial, AtZeroIsBernoulliNumber) {
  for (unsigned n = 0; n <= 30; ++n) EXPECT_EQ(bernoulli_polynomial(n, 0), bernoulli_number(n));
}

TEST(BernoulliPolynomial, DifferenceIdentity) {
  // B_n(x+1) - B_n(x) = n x^{n-1}
  const Rational x(5, 7);
  for (unsigned n = 1; n <= 20; ++n)
    EXPECT_EQ(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x), Rational(n) * pow(x, n - 1));
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling_first_unsigned(3, 3), 1);
  EXPECT_EQ(stirling_first_unsigned(3, 2), 3);
  EXPECT_EQ(stirling_first_unsigned(3, 1), 2);
  EXPECT_EQ(stirling_first_unsigned(1, 1), 1);
  EXPECT_EQ(stirling_first_unsigned(5, 1), 24);
}

TEST(Stirling, RejectsOutOfRange) {
  EXPECT_THROW(stirling_first_unsigned(3, 0), std::out_of_range);
  EXPECT_THROW(stirling_first_unsigned(3, 4), std::out_of_range);
  EXPECT_THROW(stirling_first_unsigned(0, 0), std::out_of_range);
}

// Both sides of C(x+r-1, r-1) = x^{(r)}/(r-1)! = sum_k S(r,k) x^{k-1}/(r-1)!
TEST(Stirling, RisingFactorialExpansion) {
  const std::vector<Rational> sample{0, 1, Rational(-1, 2), Rational(7, 3), -5, Rational(11, 4)};
  for (unsigned r = 1; r <= 12; ++r) {
    const Rational inv = Rational(1) / Rational(testing::fact(r - 1));
    for (const auto& x : sample) {
      Rational via_stirling = 0;
      for (unsigned k = 1; k <= r; ++k) via_stirling += Rational(stirling_first_unsigned(r, k)) * pow(x, k - 1);
      EXPECT_EQ(rising_factorial(x, r) * inv, via_stirling * inv) << "r=" << r << " x=" << to_string(x);
    }
  }
}

TEST(Stirling, BinomialForm) {
  for (unsigned r = 1; r <= 8; ++r)
    for (long n = 0; n <= 10; ++n)
      EXPECT_EQ(rising_factorial(Rational(n), r) / Rational(testing::fact(r - 1)), Rational(testing::choose(n + r - 1, r - 1)));
}

TEST(Moebius, Examples) {
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(12), 0);
  EXPECT_EQ(moebius(30), -1);
  EXPECT_EQ(moebius(49), 0);
  EXPECT_EQ(moebius(97), -1);
}

TEST(Moebius, DivisorSumIsIndicator) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    int acc = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) acc += moebius(d);
    EXPECT_EQ(acc, n == 1 ? 1 : 0) << "n=" << n;
  }
}

TEST(Combinatorics, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(multinomial(4, {2, 1, 1}), 12);
  EXPECT_EQ(multinomial(4, {2, 1}), 0);
  const std::vector<std::uint64_t> v{4, 6};
  EXPECT_EQ(lcm_list(v), 12u);
  EXPECT_EQ(rising_factorial(Rational(3), 0), 1);
  EXPECT_EQ(rising_factorial(Rational(3), 1), 1);
  EXPECT_EQ(rising_factorial(Rational(3), 3), 20);
}

TEST(Combinatorics, LcmRejectsZero) {
  const std::vector<std::uint64_t> v{4, 0};
  EXPECT_THROW(lcm_list(v), std::invalid_argument);
}

TEST(Rational, Rendering) {
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(14)), "14");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Compositions, CountMatchesStarsAndBars) {
  for (unsigned total = 0; total <= 7; ++total)
    for (std::size_t parts = 1; parts <= 4; ++parts) {
      long seen = 0;
      for_each_composition(total, parts, [&](const std::vector<unsigned>& c) {
        unsigned s = 0;
        for (auto x : c) s += x;
        EXPECT_EQ(s, total);
        ++seen;
      });
      EXPECT_EQ(seen, testing::choose(total + parts - 1, parts - 1).get_si());
    }
}

TEST(SpecialNumberCache, ConcurrentReadersSeeFinalValues) {
  SpecialNumberCache cache;
  const auto expected = testing::bernoulli_by_series(80);
  std::vector<std::thread> pool;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&, t] {
      for (unsigned n = 80; n-- > 0;)
        if (cache.bernoulli(n) != expected[n]) ++bad[t];
    });
  for (auto& th : pool) th.join();
  for (int b : bad) EXPECT_EQ(b, 0);
  // recomputation in a fresh cache is identical
  SpecialNumberCache fresh;
  EXPECT_EQ(fresh.bernoulli(40), cache.bernoulli(40));
  EXPECT_EQ(fresh.stirling(9, 4), cache.stirling(9, 4));
}

}  // namespace
}  // namespace mpart
