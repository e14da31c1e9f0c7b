// Share of n <= N with p_{a,k}(n) not divisible by m, against 1/(k sum a_i).
#ifndef MPART_DENSITY_HPP
#define MPART_DENSITY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"

namespace mpart {

/// p_{a,k}(n) mod m for n = 0..n_max, reducing during the convolution.
inline std::vector<std::uint64_t> count_series_mod(const PartitionSpec& spec, std::uint64_t m, std::uint64_t n_max) {
  if (m < 2) throw std::invalid_argument("count_series_mod: modulus must be >= 2");
  std::vector<std::uint64_t> v(n_max + 1, 0);
  v[0] = 1 % m;
  for (auto e : expand_ak(spec))
    for (std::uint64_t n = e; n <= n_max; ++n) {
      v[n] += v[n - e];
      if (v[n] >= m) v[n] -= m;
    }
  return v;
}

inline Rational density_bound(const PartitionSpec& spec) {
  return Rational(1) / Rational(Integer(static_cast<unsigned long>(spec.k())) *
                                Integer(static_cast<unsigned long>(spec.sum_of_parts())));
}

struct DensityResult {
  PartitionSpec spec;
  std::uint64_t m = 2;
  std::uint64_t N = 0;
  std::uint64_t hits = 0;
  Rational density;           // hits / (N + 1), over n in [0, N]
  Rational density_over_n;    // hits / N; equals density when N = 0
  Rational bound;
  bool violation = false;     // informational: the bound is a liminf
};

inline DensityResult density_mod(const PartitionSpec& spec, std::uint64_t m, std::uint64_t N) {
  if (m < 2) throw std::invalid_argument("density_mod: modulus must be >= 2");
  const auto residues = count_series_mod(spec, m, N);
  DensityResult res{spec, m, N, 0, 0, 0, density_bound(spec), false};
  for (auto x : residues)
    if (x != 0) ++res.hits;
  const Integer hits(static_cast<unsigned long>(res.hits));
  res.density = make_rational(hits, Integer(static_cast<unsigned long>(N + 1)));
  res.density_over_n = N == 0 ? res.density : make_rational(hits, Integer(static_cast<unsigned long>(N)));
  res.violation = res.density < res.bound;
  return res;
}

}  // namespace mpart

#endif  // MPART_DENSITY_HPP
