// Independent brute-force helpers shared by the unit tests. Nothing here
// calls into the library's counting or coefficient code.
#ifndef MPART_TESTS_SUPPORT_HPP
#define MPART_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace mpart::testing {

/// Number of (x_1..x_t) >= 0 with sum parts[i] * x_i = n, by recursion on
/// the last part.
inline mpz_class enumerate_solutions(const std::vector<std::uint64_t>& parts, std::uint64_t n) {
  std::function<mpz_class(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) -> mpz_class {
    if (i == parts.size()) return left == 0 ? 1 : 0;
    mpz_class total = 0;
    for (std::uint64_t x = 0; x * parts[i] <= left; ++x) total += rec(i + 1, left - x * parts[i]);
    return total;
  };
  return rec(0, n);
}

/// B_n from the generating function x/(e^x - 1) by inverting the series
/// sum x^i/(i+1)!; independent of the library recurrence.
inline std::vector<mpq_class> bernoulli_by_series(unsigned n_max) {
  std::vector<mpq_class> inv_fact(n_max + 2);
  mpz_class f = 1;
  for (unsigned i = 0; i < n_max + 2; ++i) {
    if (i) f *= i;
    inv_fact[i] = mpq_class(1, 1) / mpq_class(f);
  }
  // a_i = 1/(i+1)!, c = 1/a
  std::vector<mpq_class> c(n_max + 1);
  c[0] = 1;
  for (unsigned m = 1; m <= n_max; ++m) {
    mpq_class acc = 0;
    for (unsigned i = 1; i <= m; ++i) acc += inv_fact[i + 1] * c[m - i];
    c[m] = -acc;
  }
  std::vector<mpq_class> out(n_max + 1);
  mpz_class g = 1;
  for (unsigned m = 0; m <= n_max; ++m) {
    if (m) g *= m;
    out[m] = c[m] * mpq_class(g);
  }
  return out;
}

inline mpz_class fact(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return fact(static_cast<unsigned>(n)) / (fact(static_cast<unsigned>(k)) * fact(static_cast<unsigned>(n - k)));
}

}  // namespace mpart::testing

#endif  // MPART_TESTS_SUPPORT_HPP
