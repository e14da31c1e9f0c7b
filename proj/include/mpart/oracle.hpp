// Ground truth for p_{a,k}(n) by power-series expansion of
// prod_i (1 - z^{a_i})^{-k}, and the coefficients f_{N,l} of
// (1 + t + ... + t^{N-1})^k.
#ifndef MPART_ORACLE_HPP
#define MPART_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpart/numbers.hpp"

namespace mpart {

/// The pair (a, k). The order of a is kept as given; repeated parts are legal.
class PartitionSpec {
 public:
  PartitionSpec(std::vector<std::uint64_t> a, std::uint64_t k) : a_(std::move(a)), k_(k) {
    if (a_.empty()) throw std::invalid_argument("PartitionSpec: a must be non-empty");
    for (auto v : a_)
      if (v < 1) throw std::invalid_argument("PartitionSpec: every a_i must be >= 1");
    if (k_ < 1) throw std::invalid_argument("PartitionSpec: k must be >= 1");
    lcm_ = lcm_list(a_);
  }

  const std::vector<std::uint64_t>& a() const { return a_; }
  std::uint64_t k() const { return k_; }
  std::size_t r() const { return a_.size(); }
  std::uint64_t D() const { return lcm_; }
  /// Number of parts of a[k]; the quasi-polynomial degree is rk() - 1.
  unsigned rk() const { return static_cast<unsigned>(a_.size() * k_); }

  Integer product_of_parts() const {
    Integer p = 1;
    for (auto v : a_) p *= Integer(static_cast<unsigned long>(v));
    return p;
  }

  std::uint64_t sum_of_parts() const {
    std::uint64_t s = 0;
    for (auto v : a_) s += v;
    return s;
  }

  std::string to_string() const {
    std::string out = "a=(";
    for (std::size_t i = 0; i < a_.size(); ++i) out += (i ? "," : "") + std::to_string(a_[i]);
    return out + "), k=" + std::to_string(k_);
  }

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::vector<std::uint64_t> a_;
  std::uint64_t k_;
  std::uint64_t lcm_;
};

/// a[k]: each a_i repeated k times, in order.
inline std::vector<std::uint64_t> expand_ak(const PartitionSpec& spec) {
  std::vector<std::uint64_t> out;
  out.reserve(spec.r() * spec.k());
  for (auto v : spec.a())
    for (std::uint64_t c = 0; c < spec.k(); ++c) out.push_back(v);
  return out;
}

struct CountTable {
  PartitionSpec spec;
  std::vector<Integer> values;  // values[n] = p_{a,k}(n), n = 0..n_max
};

/// Multiplies in each geometric factor 1/(1 - z^e) by the prefix update
/// values[n] += values[n - e].
inline CountTable count_series(const PartitionSpec& spec, std::uint64_t n_max) {
  std::vector<Integer> v(n_max + 1, 0);
  v[0] = 1;
  for (auto e : expand_ak(spec))
    for (std::uint64_t n = e; n <= n_max; ++n) v[n] += v[n - e];
  return {spec, std::move(v)};
}

/// Coefficients of (1 + t + ... + t^{N-1})^k, length k(N-1)+1.
inline std::vector<Integer> f_coefficients(std::uint64_t N, std::uint64_t k) {
  if (N < 1 || k < 1) throw std::invalid_argument("f_coefficients: need N >= 1 and k >= 1");
  std::vector<Integer> poly{1};
  for (std::uint64_t step = 0; step < k; ++step) {
    std::vector<Integer> next(poly.size() + N - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::uint64_t d = 0; d < N; ++d) next[i + d] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

/// sum over i, j >= 0 with iN + j = l of (-1)^i C(k, i) C(j+k-1, j).
/// Returns 0 and sets *out_of_range when l is outside [0, k(N-1)].
inline Integer f_coefficient_formula(std::uint64_t N, std::uint64_t k, std::int64_t l,
                                     bool* out_of_range = nullptr) {
  if (N < 1 || k < 1) throw std::invalid_argument("f_coefficient_formula: need N >= 1 and k >= 1");
  const bool bad = l < 0 || static_cast<std::uint64_t>(l) > k * (N - 1);
  if (out_of_range) *out_of_range = bad;
  if (bad) return 0;
  const auto kk = static_cast<std::int64_t>(k);
  const auto NN = static_cast<std::int64_t>(N);
  Integer acc = 0;
  for (std::int64_t i = 0; i <= kk && i * NN <= l; ++i) {
    const std::int64_t j = l - i * NN;
    Integer term = binomial(kk, i) * binomial(j + kk - 1, j);
    if (i % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace mpart

#endif  // MPART_ORACLE_HPP
