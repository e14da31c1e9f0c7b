// Sylvester waves of p_{a,k}(n) and its polynomial part.
//
// Each coefficient function d_m is a rational sequence of period D. Its
// component of exact order j is extracted with the averaging projectors
//   P_e[d](n) = (e/D) sum_{u=0}^{D/e-1} d(n + u e)
// and Moebius inversion over the divisors of j. The j-th wave collects the
// order-j components of all d_m; wave 1 is the polynomial part.
#ifndef MPART_WAVES_HPP
#define MPART_WAVES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"
#include "mpart/quasipoly.hpp"
#include "mpart/real.hpp"

namespace mpart {

/// Polynomial in n with constant term first.
using Polynomial = std::vector<Rational>;

inline Rational evaluate(const Polynomial& p, const Rational& n) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * n + p[i];
  return acc;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// All divisors of all a_i, ascending.
inline std::vector<std::uint64_t> wave_indices(const PartitionSpec& spec) {
  std::set<std::uint64_t> out;
  for (auto a : spec.a())
    for (auto d : divisors(a)) out.insert(d);
  return {out.begin(), out.end()};
}

struct WaveSet {
  PartitionSpec spec;
  std::map<std::uint64_t, QuasiPolynomial> waves;
  std::vector<std::uint64_t> indices;

  Rational evaluate_sum(std::uint64_t n) const {
    Rational acc = 0;
    for (const auto& [j, w] : waves) acc += evaluate(w, n);
    return acc;
  }
};

/// Order-j component of a period-D quasi-polynomial, as a period-j
/// quasi-polynomial. j must divide the period.
inline QuasiPolynomial exact_order_component(const QuasiPolynomial& qp, std::uint64_t j) {
  const std::uint64_t D = qp.period();
  if (j == 0 || D % j) throw std::invalid_argument("exact_order_component: j must divide the period");
  QuasiPolynomial out(j, qp.degree());
  for (auto e : divisors(j)) {
    const int mu = moebius(j / e);
    if (mu == 0) continue;
    const Rational scale = Rational(static_cast<unsigned long>(e)) / Rational(static_cast<unsigned long>(D));
    for (std::uint64_t s = 0; s < j; ++s) {
      for (unsigned m = 0; m <= qp.degree(); ++m) {
        Rational avg = 0;
        for (std::uint64_t u = 0; u < D / e; ++u) avg += qp.coeff((s + u * e) % D, m);
        avg *= scale;
        if (mu > 0) out.coeff(s, m) += avg;
        else out.coeff(s, m) -= avg;
      }
    }
  }
  return out;
}

/// True when the rows of qp repeat with some proper divisor of its period.
inline bool has_smaller_period(const QuasiPolynomial& qp) {
  const std::uint64_t P = qp.period();
  for (auto e : divisors(P)) {
    if (e == P) continue;
    bool periodic = true;
    for (std::uint64_t s = e; s < P && periodic; ++s) periodic = qp.row(s) == qp.row(s % e);
    if (periodic) return true;
  }
  return false;
}

/// Throws ConsistencyError if some j | D that divides no a_i carries a
/// nonzero component.
inline WaveSet decompose_waves(const PartitionSpec& spec) {
  const auto qp = build_quasipolynomial(spec, QuasiMethod::closed_form);
  WaveSet ws{spec, {}, wave_indices(spec)};
  const std::set<std::uint64_t> allowed(ws.indices.begin(), ws.indices.end());
  for (auto j : divisors(spec.D())) {
    auto component = exact_order_component(qp, j);
    if (allowed.count(j)) {
      ws.waves.emplace(j, std::move(component));
    } else if (!component.is_zero()) {
      throw ConsistencyError("nonzero wave of order " + std::to_string(j) + " which divides no part, " +
                             spec.to_string());
    }
  }
  return ws;
}

/// Polynomial part from the unfiltered box sum over C:
///   norm * sum_{l in C} weight(l) prod_{t=1}^{rk-1} ((n - a.l)/D + t)
/// with norm = 1/(D (rk-1)!), or 1/(rk-1)! when `literal` is set.
inline Polynomial polynomial_part_box_sum(const PartitionSpec& spec, bool literal = false) {
  const unsigned R = spec.rk();
  const Rational Dq(static_cast<unsigned long>(spec.D()));
  Polynomial acc(R, 0);
  for (const auto& term : index_terms(spec)) {
    if (term.weight == 0) continue;
    const Rational shift = Rational(static_cast<unsigned long>(term.dot)) / Dq;
    std::vector<std::pair<Rational, Rational>> factors;
    for (unsigned t = 1; t < R; ++t) factors.emplace_back(1 / Dq, Rational(t) - shift);
    const auto poly = expand_linear_product(factors);
    for (unsigned i = 0; i < R; ++i) acc[i] += Rational(term.weight) * poly[i];
  }
  Rational norm = 1 / Rational(factorial(R - 1));
  if (!literal) norm /= Dq;
  for (auto& c : acc) c *= norm;
  return acc;
}

/// Polynomial part from Bernoulli numbers: the coefficient of n^{rk-1-u} is
///   (-1)^u / ((rk-1-u)! (a_1...a_r)^k)
///     * sum_{l_1+..+l_r = u} prod_s a_s^{l_s} G(l_s),
/// G(l) = sum over compositions of l into k parts of prod B_i / i!.
inline Polynomial polynomial_part_bernoulli(const PartitionSpec& spec) {
  const unsigned R = spec.rk();
  const auto k = static_cast<std::size_t>(spec.k());
  std::vector<Rational> G(R, 0);
  for (unsigned l = 0; l < R; ++l) {
    for_each_composition(l, k, [&](const std::vector<unsigned>& idx) {
      Rational term = 1;
      for (unsigned i : idx) term *= bernoulli_number(i) / Rational(factorial(i));
      G[l] += term;
    });
  }
  const Rational prod_k = Rational(pow(spec.product_of_parts(), static_cast<unsigned>(spec.k())));
  Polynomial out(R, 0);
  for (unsigned u = 0; u < R; ++u) {
    Rational inner = 0;
    for_each_composition(u, spec.r(), [&](const std::vector<unsigned>& l) {
      Rational term = 1;
      for (std::size_t s = 0; s < l.size(); ++s)
        term *= Rational(pow(Integer(static_cast<unsigned long>(spec.a()[s])), l[s])) * G[l[s]];
      inner += term;
    });
    Rational c = inner / (Rational(factorial(R - 1 - u)) * prod_k);
    if (u % 2) c = -c;
    out[R - 1 - u] = c;
  }
  return out;
}

/// Literal evaluation of the literal root-of-unity wave formula at (j, n)
/// next to the reference wave value.
struct WaveFormulaEntry {
  std::uint64_t j = 0;
  std::uint64_t n = 0;
  Real root_sum_re = 0, root_sum_im = 0;  // sum_{l=1}^{j} e^{2 pi i l / j}
  Rational rational_factor;                // everything except the root sum
  Real literal_re = 0, literal_im = 0;
  Rational reference;
  bool agrees = false;
};

inline WaveFormulaEntry wave_formula_literal(const PartitionSpec& spec, const WaveSet& ws, std::uint64_t j,
                                             std::uint64_t n) {
  const auto it = ws.waves.find(j);
  if (it == ws.waves.end()) throw std::invalid_argument("wave_formula_literal: j is not a wave index");
  WaveFormulaEntry e;
  e.j = j;
  e.n = n;
  const Real two_pi = 2 * boost::multiprecision::acos(Real(-1));
  for (std::uint64_t l = 1; l <= j; ++l) {
    const Real angle = two_pi * Real(l) / Real(j);
    e.root_sum_re += boost::multiprecision::cos(angle);
    e.root_sum_im += boost::multiprecision::sin(angle);
  }

  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  const Rational Dq(static_cast<unsigned long>(D));
  const Rational d_pow_k = pow(Dq, static_cast<unsigned>(spec.k()));
  const Rational nq(static_cast<unsigned long>(n));
  Rational acc = 0;
  for (const auto& term : index_terms(spec)) {
    if (term.dot % D != n % D || term.weight == 0) continue;
    const Rational dot(static_cast<unsigned long>(term.dot));
    for (unsigned m = 1; m < R; ++m) {
      Rational inner = 0;
      for (unsigned t = m - 1; t < R; ++t)
        inner += Rational(stirling_first_unsigned(R, t + 1) * binomial(t, m - 1)) * pow(dot, t - m + 1);
      acc += Rational(term.weight) * inner / d_pow_k * pow(nq, m - 1);
    }
  }
  e.rational_factor = acc / (Dq * Rational(factorial(R - 1)));
  const Real factor = to_real(e.rational_factor);
  e.literal_re = e.root_sum_re * factor;
  e.literal_im = e.root_sum_im * factor;
  e.reference = evaluate(it->second, n);

  using boost::multiprecision::abs;
  const Real ref = to_real(e.reference);
  const Real tol = Real("1e-20") * (1 + abs(ref));
  e.agrees = abs(e.literal_re - ref) <= tol && abs(e.literal_im) <= tol;
  return e;
}

}  // namespace mpart

#endif  // MPART_WAVES_HPP
