// Numerical layer: Hurwitz zeta, Barnes zeta (truncated lattice sum and the
// finite Hurwitz reduction over residues mod D), and the k-fold product of
// Barnes zeta values compared against series built from partition counts.
//
// Everything here is floating point with explicit tolerances.
#ifndef MPART_ANALYTIC_HPP
#define MPART_ANALYTIC_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"
#include "mpart/quasipoly.hpp"
#include "mpart/real.hpp"

namespace mpart {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Division {
  std::uint64_t q = 0;
  std::uint64_t rem = 0;
  friend bool operator==(const Division&, const Division&) = default;
};

/// (q, rem) with a.j = qD + rem, 0 <= rem < D, for 0 <= j_s <= D/a_s - 1.
inline Division residue_division(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& j) {
  if (a.size() != j.size()) throw std::invalid_argument("residue_division: tuple length differs from r");
  const std::uint64_t D = lcm_list(a);
  std::uint64_t dot = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (j[s] > D / a[s] - 1) throw std::out_of_range("residue_division: j_" + std::to_string(s + 1) + " out of range");
    dot += a[s] * j[s];
  }
  return {dot / D, dot % D};
}

/// All tuples of the residue box with their divisions, odometer order.
struct ResidueTable {
  std::vector<std::uint64_t> a;
  std::uint64_t D = 1;
  std::vector<std::vector<std::uint64_t>> tuples;
  std::vector<Division> divisions;
};

inline ResidueTable residue_table(const std::vector<std::uint64_t>& a) {
  ResidueTable t;
  t.a = a;
  t.D = lcm_list(a);
  std::vector<std::uint64_t> bounds;
  for (auto v : a) bounds.push_back(t.D / v - 1);
  for_each_tuple(bounds, [&](const std::vector<std::uint64_t>& j) {
    t.tuples.push_back(j);
    t.divisions.push_back(residue_division(a, j));
  });
  return t;
}

namespace detail {

inline constexpr unsigned kEulerMaclaurinTerms = 10;

/// (s)_n = s (s+1) ... (s+n-1)
inline Real pochhammer(const Real& s, unsigned n) {
  Real out = 1;
  for (unsigned i = 0; i < n; ++i) out *= s + i;
  return out;
}

}  // namespace detail

/// sum_{n >= 0} (n + w)^{-s} for real s > 1, w > 0, absolute error <= tol.
///
/// Direct summation up to N, then the Euler-Maclaurin tail: the integral,
/// half the boundary term and K Bernoulli corrections. (x + w)^{-s} is
/// completely monotone, so the remainder is bounded by the first omitted
/// correction, and N is chosen to push that below tol / 2.
inline Real hurwitz_zeta(const Real& s, const Real& w, const Real& tol = Real("1e-25")) {
  using boost::multiprecision::abs;
  using boost::multiprecision::ceil;
  using boost::multiprecision::pow;
  if (!(s > 1)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(w > 0)) throw DomainError("hurwitz_zeta: w must be positive");
  if (!(tol > 0)) throw DomainError("hurwitz_zeta: tol must be positive");

  constexpr unsigned K = detail::kEulerMaclaurinTerms;
  const Real next_coeff = abs(to_real(bernoulli_number(2 * K + 2) / Rational(factorial(2 * K + 2)))) *
                          detail::pochhammer(s, 2 * K + 1);
  // need next_coeff * (N + w)^{-(s + 2K + 1)} <= tol / 2
  const Real x_min = pow(2 * next_coeff / tol, 1 / (s + 2 * K + 1));
  const Real n_real = ceil(x_min - w);
  const std::uint64_t N = n_real < 1 ? 1 : static_cast<std::uint64_t>(n_real);

  Real acc = 0;
  for (std::uint64_t n = N; n-- > 0;) acc += pow(Real(n) + w, -s);  // small terms first
  const Real x = Real(N) + w;
  Real tail = pow(x, 1 - s) / (s - 1) + pow(x, -s) / 2;
  for (unsigned k = 1; k <= K; ++k)
    tail += to_real(bernoulli_number(2 * k) / Rational(factorial(2 * k))) * detail::pochhammer(s, 2 * k - 1) *
            pow(x, -s - (2 * k - 1));
  return acc + tail;
}

struct BarnesDirect {
  Real value;
  Real tail_estimate;
};

/// Lattice sum over u in [0, cutoff]^r of (a.u + w)^{-s}. Lattice points are
/// bucketed by a.u (counts from the truncated product
/// prod_i (1 + z^{a_i} + ... + z^{a_i cutoff})), so the cost is linear in
/// sum(a) * cutoff. The tail estimate integrates (a.u + w)^{-s} over the
/// part of the orthant outside the cube.
inline BarnesDirect barnes_zeta_direct(const std::vector<std::uint64_t>& a, const Real& s, const Real& w,
                                       std::uint64_t cutoff) {
  using boost::multiprecision::pow;
  const auto r = a.size();
  if (r == 0) throw std::invalid_argument("barnes_zeta_direct: a must be non-empty");
  if (!(s > Real(r))) throw DomainError("barnes_zeta_direct: s must exceed r");
  if (!(w > 0)) throw DomainError("barnes_zeta_direct: w must be positive");

  std::vector<Real> count{1};
  for (auto part : a) {
    std::vector<Real> next(count.size() + part * cutoff, 0);
    // next[n] = sum_{i=0}^{cutoff} count[n - i*part], a sliding window per residue class
    for (std::uint64_t res = 0; res < part; ++res) {
      Real window = 0;
      for (std::uint64_t n = res, step = 0; n < next.size(); n += part, ++step) {
        if (n < count.size()) window += count[n];
        if (step > cutoff) {
          const std::uint64_t drop = n - (cutoff + 1) * part;
          if (drop < count.size()) window -= count[drop];
        }
        next[n] = window;
      }
    }
    count = std::move(next);
  }
  Real value = 0;
  for (std::size_t n = count.size(); n-- > 0;)
    if (count[n] != 0) value += count[n] * pow(Real(n) + w, -s);

  Real prod_a = 1;
  for (auto part : a) prod_a *= Real(part);
  Real falling = 1;
  for (std::size_t t = 1; t <= r; ++t) falling *= s - Real(t);
  Real tail = 0;
  for (auto part : a) tail += pow(Real(part) * Real(cutoff + 1) + w, -(s - Real(r)));
  tail /= prod_a * falling;
  return {value, tail};
}

/// Smallest power-of-two cutoff (>= 64) whose tail estimate is below target.
inline std::uint64_t choose_direct_cutoff(const std::vector<std::uint64_t>& a, const Real& s, const Real& w,
                                          const Real& target, std::uint64_t max_cutoff = std::uint64_t{1} << 22) {
  using boost::multiprecision::pow;
  const auto r = a.size();
  Real prod_a = 1;
  for (auto part : a) prod_a *= Real(part);
  Real falling = 1;
  for (std::size_t t = 1; t <= r; ++t) falling *= s - Real(t);
  std::uint64_t c = 64;
  while (c < max_cutoff) {
    Real tail = 0;
    for (auto part : a) tail += pow(Real(part) * Real(c + 1) + w, -(s - Real(r)));
    if (tail / (prod_a * falling) < target) break;
    c *= 2;
  }
  return c;
}

namespace detail {

/// Rational weight of hurwitz_zeta(s - m + l, (rem + w)/D) contributed by one
/// residue tuple, before the 1/(D^s (r-1)!) prefactor.
inline Real lemma_weight(unsigned r, unsigned m, unsigned l, std::uint64_t dot, const Real& w, std::uint64_t D) {
  using boost::multiprecision::pow;
  Real c = to_real(Rational(stirling_first_unsigned(r, m + 1) * binomial(m, l)));
  if (l % 2) c = -c;
  return c * pow((Real(dot) + w) / Real(D), static_cast<int>(l));
}

}  // namespace detail

/// Barnes zeta through its finite reduction to Hurwitz zeta values:
///   1/(D^s (r-1)!) sum_{j in residue box} sum_{m=0}^{r-1} S(r, m+1)
///     sum_{l=0}^{m} (-1)^l C(m, l) ((a.j + w)/D)^l zeta(s - m + l, (rem(j) + w)/D).
inline Real barnes_zeta_lemma(const std::vector<std::uint64_t>& a, const Real& s, const Real& w,
                              const Real& tol = Real("1e-20")) {
  using boost::multiprecision::pow;
  const auto r = static_cast<unsigned>(a.size());
  if (r == 0) throw std::invalid_argument("barnes_zeta_lemma: a must be non-empty");
  if (!(s > Real(r)))
    throw DomainError("barnes_zeta_lemma: every Hurwitz argument s - m + l must exceed 1; use s > r = " +
                      std::to_string(r));
  if (!(w > 0)) throw DomainError("barnes_zeta_lemma: w must be positive");
  const auto table = residue_table(a);
  const std::uint64_t D = table.D;
  const Real inner_tol = tol * Real("1e-6");

  std::map<std::pair<std::uint64_t, unsigned>, Real> hz;  // (rem, m - l) -> zeta
  Real acc = 0;
  for (std::size_t idx = 0; idx < table.tuples.size(); ++idx) {
    const auto& div = table.divisions[idx];
    const std::uint64_t dot = div.q * D + div.rem;
    for (unsigned m = 0; m < r; ++m) {
      for (unsigned l = 0; l <= m; ++l) {
        auto key = std::make_pair(div.rem, m - l);
        auto it = hz.find(key);
        if (it == hz.end())
          it = hz.emplace(key, hurwitz_zeta(s - Real(m - l), (Real(div.rem) + w) / Real(D), inner_tol)).first;
        acc += detail::lemma_weight(r, m, l, dot, w, D) * it->second;
      }
    }
  }
  return acc / (pow(Real(D), s) * to_real(Rational(factorial(r - 1))));
}

/// p_a(n) for n = 0..cutoff as reals.
inline std::vector<Real> real_counts(const PartitionSpec& spec, std::uint64_t cutoff) {
  const auto table = count_series(spec, cutoff);
  std::vector<Real> out;
  out.reserve(table.values.size());
  for (const auto& v : table.values) out.push_back(to_real(v));
  return out;
}

enum class NumericVerdict { pass, fail, corrected };

inline const char* to_string(NumericVerdict v) {
  switch (v) {
    case NumericVerdict::pass: return "PASS";
    case NumericVerdict::fail: return "FAIL";
    case NumericVerdict::corrected: return "CORRECTED";
  }
  return "FAIL";
}

struct ZetaProductCheck {
  Real product;       // prod_i zeta_a(s, w_i), each from the Hurwitz reduction
  Real corrected;     // sum over (n_1..n_k) of prod_j p_a(n_j) / (n_j + w_j)^s
  Real literal_p1;    // sum_n p_{a,k}(n) sum_{n_1+..+n_k = n} prod_j (n_j + w_j)^{-s}
  Real literal_p2;    // literal Hurwitz expression for the k-fold product
  NumericVerdict corrected_verdict = NumericVerdict::fail;
  NumericVerdict literal_p1_verdict = NumericVerdict::fail;
  NumericVerdict literal_p2_verdict = NumericVerdict::fail;
};

/// Literal Hurwitz expression for the k-fold product:
///   1/(D^s (r-1)!) sum_m S(r, m+1) sum_l (-1)^l C(m, l)
///     prod_i sum_{j in residue box} ((a.j + w_i)/D)^l zeta(s - m + l, (rem(j) + w_i)/D)
/// with the residue box taken 0-based.
inline Real zeta_product_literal_hurwitz(const std::vector<std::uint64_t>& a, const Real& s,
                                         const std::vector<Real>& w, const Real& tol) {
  using boost::multiprecision::pow;
  const auto r = static_cast<unsigned>(a.size());
  if (!(s > Real(r))) throw DomainError("zeta_product_literal_hurwitz: use s > r");
  const auto table = residue_table(a);
  const std::uint64_t D = table.D;
  Real acc = 0;
  for (unsigned m = 0; m < r; ++m) {
    for (unsigned l = 0; l <= m; ++l) {
      Real prod = 1;
      for (const auto& wi : w) {
        Real inner = 0;
        for (std::size_t idx = 0; idx < table.tuples.size(); ++idx) {
          const auto& div = table.divisions[idx];
          const Real base = (Real(div.q * D + div.rem) + wi) / Real(D);
          inner += pow(base, static_cast<int>(l)) *
                   hurwitz_zeta(s - Real(m) + Real(l), (Real(div.rem) + wi) / Real(D), tol * Real("1e-6"));
        }
        prod *= inner;
      }
      Real c = to_real(Rational(stirling_first_unsigned(r, m + 1) * binomial(m, l)));
      if (l % 2) c = -c;
      acc += c * prod;
    }
  }
  return acc / (pow(Real(D), s) * to_real(Rational(factorial(r - 1))));
}

/// Compares the k-fold Barnes zeta product against the count-weighted series.
/// w must have exactly k entries; s must exceed r + 1.
inline ZetaProductCheck zak_product_check(const PartitionSpec& spec, const Real& s, const std::vector<Real>& w,
                                          std::uint64_t cutoff, const Real& tol) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  if (w.size() != spec.k())
    throw std::invalid_argument("zak_product_check: need exactly k = " + std::to_string(spec.k()) + " shifts");
  if (!(s > Real(spec.r() + 1))) throw DomainError("zak_product_check: use s > r + 1");
  for (const auto& wi : w)
    if (!(wi > 0)) throw DomainError("zak_product_check: shifts must be positive");

  ZetaProductCheck out;
  out.product = 1;
  for (const auto& wi : w) out.product *= barnes_zeta_lemma(spec.a(), s, wi);

  const PartitionSpec single(spec.a(), 1);
  const auto pa = real_counts(single, cutoff);
  // The box sum over (n_1..n_k) factorises into k one-dimensional sums.
  out.corrected = 1;
  for (const auto& wi : w) {
    Real sum = 0;
    for (std::uint64_t n = cutoff + 1; n-- > 0;) sum += pa[n] * pow(Real(n) + wi, -s);
    out.corrected *= sum;
  }

  // conv[n] = sum_{n_1+..+n_k = n} prod_j (n_j + w_j)^{-s}
  std::vector<Real> conv(cutoff + 1, 0);
  conv[0] = 1;
  for (const auto& wi : w) {
    std::vector<Real> g(cutoff + 1);
    for (std::uint64_t n = 0; n <= cutoff; ++n) g[n] = pow(Real(n) + wi, -s);
    std::vector<Real> next(cutoff + 1, 0);
    for (std::uint64_t n = 0; n <= cutoff; ++n)
      for (std::uint64_t i = 0; i <= n; ++i) next[n] += conv[i] * g[n - i];
    conv = std::move(next);
  }
  const auto pak = real_counts(spec, cutoff);
  out.literal_p1 = 0;
  for (std::uint64_t n = cutoff + 1; n-- > 0;) out.literal_p1 += pak[n] * conv[n];

  out.literal_p2 = zeta_product_literal_hurwitz(spec.a(), s, w, tol);

  out.corrected_verdict = abs(out.corrected - out.product) <= tol ? NumericVerdict::corrected : NumericVerdict::fail;
  out.literal_p1_verdict = abs(out.literal_p1 - out.product) <= tol ? NumericVerdict::pass : NumericVerdict::fail;
  out.literal_p2_verdict = abs(out.literal_p2 - out.product) <= tol ? NumericVerdict::pass : NumericVerdict::fail;
  return out;
}

/// Single-part reduction: zeta_{(a_1)}(s, w) against a_1^{-s} zeta(s, w/a_1)
/// and against the literal a_1^{-s} zeta(s, a_1/w).
struct SinglePartCheck {
  Real direct;
  Real tail_estimate;
  Real corrected;
  Real literal;
  NumericVerdict corrected_verdict = NumericVerdict::fail;
  NumericVerdict literal_verdict = NumericVerdict::fail;
};

inline SinglePartCheck single_part_reduction_check(std::uint64_t a1, const Real& s, const Real& w, const Real& tol) {
  using boost::multiprecision::abs;
  using boost::multiprecision::pow;
  SinglePartCheck out;
  const std::vector<std::uint64_t> a{a1};
  const auto cutoff = choose_direct_cutoff(a, s, w, tol / 100);
  const auto direct = barnes_zeta_direct(a, s, w, cutoff);
  out.direct = direct.value;
  out.tail_estimate = direct.tail_estimate;
  const Real scale = pow(Real(a1), -s);
  out.corrected = scale * hurwitz_zeta(s, w / Real(a1));
  out.literal = scale * hurwitz_zeta(s, Real(a1) / w);
  const Real band = tol + 2 * direct.tail_estimate;
  out.corrected_verdict = abs(out.corrected - out.direct) <= band ? NumericVerdict::corrected : NumericVerdict::fail;
  out.literal_verdict = abs(out.literal - out.direct) <= band ? NumericVerdict::pass : NumericVerdict::fail;
  return out;
}

}  // namespace mpart

#endif  // MPART_ANALYTIC_HPP
