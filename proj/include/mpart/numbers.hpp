// Exact rational arithmetic and the special numbers used throughout:
// Bernoulli numbers and polynomials, unsigned Stirling numbers of the first
// kind, the Moebius function, binomials, multinomials and rising factorials.
//
// Bernoulli convention: B_1 = -1/2.
#ifndef MPART_NUMBERS_HPP
#define MPART_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpart {

using Integer = mpz_class;
using Rational = mpq_class;

/// Name of the Bernoulli sign convention in effect, echoed by audit reports.
inline constexpr const char* kBernoulliConvention = "B_1 = -1/2";

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(Rational q) {
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// x^e with 0^0 = 1.
inline Rational pow(const Rational& x, unsigned e) {
  Rational out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

inline Integer pow(const Integer& x, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), e);
  return out;
}

inline Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// C(n, k); zero when k < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// n! / (k_1! ... k_t!); zero unless the parts are non-negative and sum to n.
inline Integer multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned long total = 0;
  for (unsigned p : parts) total += p;
  if (total != n) return 0;
  Integer out = 1;
  unsigned long running = 0;
  for (unsigned p : parts) {
    running += p;
    out *= binomial(static_cast<std::int64_t>(running), p);
  }
  return out;
}

inline Integer multinomial(unsigned n, std::initializer_list<unsigned> parts) {
  return multinomial(n, std::span<const unsigned>(parts.begin(), parts.size()));
}

/// Calls visit(parts) for every composition of `total` into `count`
/// non-negative parts.
inline void for_each_composition(unsigned total, std::size_t count,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts(count, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == count) {
      parts[pos] = left;
      visit(parts);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      parts[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (count == 0) {
    if (total == 0) visit(parts);
    return;
  }
  rec(0, total);
}

/// x^{(r)} = (x+1)(x+2)...(x+r-1); the empty product for r in {0, 1}.
inline Rational rising_factorial(const Rational& x, unsigned r) {
  Rational out = 1;
  for (unsigned i = 1; i < r; ++i) out *= x + i;
  return out;
}

/// Least common multiple; throws on overflow of 64 bits or non-positive input.
inline std::uint64_t lcm_list(std::span<const std::uint64_t> values) {
  std::uint64_t out = 1;
  for (std::uint64_t v : values) {
    if (v == 0) throw std::invalid_argument("lcm_list: entries must be positive");
    std::uint64_t g = std::gcd(out, v);
    std::uint64_t step = v / g;
    if (out > UINT64_MAX / step) throw std::overflow_error("lcm_list: result exceeds 64 bits");
    out *= step;
  }
  return out;
}

inline int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Memo tables for Bernoulli and Stirling numbers. Entries are written under
/// the lock and never modified afterwards, so a returned value is final.
class SpecialNumberCache {
 public:
  Rational bernoulli(unsigned n) {
    std::lock_guard lock(mutex_);
    if (bernoulli_.empty()) bernoulli_.push_back(1);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    while (bernoulli_.size() <= n) {
      const unsigned m = static_cast<unsigned>(bernoulli_.size());
      Rational acc = 0;
      for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli_[k];
      bernoulli_.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_[n];
  }

  Integer stirling(unsigned r, unsigned k) {
    if (r < 1 || k < 1 || k > r)
      throw std::out_of_range("stirling_first_unsigned: need 1 <= k <= r");
    std::lock_guard lock(mutex_);
    // Row r holds the coefficients of (x+1)...(x+r-1), constant term first.
    if (stirling_.empty()) stirling_.push_back({});  // unused r = 0
    while (stirling_.size() <= r) {
      const unsigned row = static_cast<unsigned>(stirling_.size());
      std::vector<Integer> next;
      if (row == 1) {
        next = {1};
      } else {
        const auto& prev = stirling_.back();  // (x+1)...(x+row-2)
        next.assign(prev.size() + 1, 0);
        for (std::size_t i = 0; i < prev.size(); ++i) {
          next[i] += prev[i] * (row - 1);
          next[i + 1] += prev[i];
        }
      }
      stirling_.push_back(std::move(next));
    }
    return stirling_[r][k - 1];
  }

  static SpecialNumberCache& global() {
    static SpecialNumberCache cache;
    return cache;
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> bernoulli_;
  std::vector<std::vector<Integer>> stirling_;
};

inline Rational bernoulli_number(unsigned n) { return SpecialNumberCache::global().bernoulli(n); }

/// B_n(x) = sum_k C(n, k) B_{n-k} x^k.
inline Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  Rational acc = 0;
  Rational xk = 1;
  for (unsigned k = 0; k <= n; ++k) {
    acc += Rational(binomial(n, k)) * bernoulli_number(n - k) * xk;
    xk *= x;
  }
  return acc;
}

/// Coefficient of x^{k-1} in x^{(r)} = (x+1)(x+2)...(x+r-1).
inline Integer stirling_first_unsigned(unsigned r, unsigned k) {
  return SpecialNumberCache::global().stirling(r, k);
}

/// Coefficients (constant first) of prod_i (c_i x + d_i).
inline std::vector<Rational> expand_linear_product(std::span<const std::pair<Rational, Rational>> factors) {
  std::vector<Rational> poly{1};
  for (const auto& [slope, offset] : factors) {
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * offset;
      next[i + 1] += poly[i] * slope;
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace mpart

#endif  // MPART_NUMBERS_HPP
