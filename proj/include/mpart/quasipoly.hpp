// Quasi-polynomial form of p_{a,k}(n) = sum_m d_m(n) n^m with period D.
//
// The closed forms below all sum over the box
//   C = { (l_1..l_r) : 0 <= l_s <= k(D/a_s - 1) }
// weighting each tuple by prod_s f_{D/a_s, l_s}, where f is the coefficient
// of t^{l_s} in (1 + ... + t^{D/a_s - 1})^k.
#ifndef MPART_QUASIPOLY_HPP
#define MPART_QUASIPOLY_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mpart/linalg.hpp"
#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"

namespace mpart {

/// Raised when an identity that must hold exactly does not (for example a
/// closed-form count that comes out non-integral).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(std::uint64_t period, unsigned degree)
      : period_(period), degree_(degree), coeffs_(period, std::vector<Rational>(degree + 1, 0)) {
    if (period == 0) throw std::invalid_argument("QuasiPolynomial: period must be positive");
  }

  std::uint64_t period() const { return period_; }
  unsigned degree() const { return degree_; }

  Rational& coeff(std::uint64_t residue, unsigned power) { return coeffs_.at(residue).at(power); }
  const Rational& coeff(std::uint64_t residue, unsigned power) const { return coeffs_.at(residue).at(power); }
  const std::vector<Rational>& row(std::uint64_t residue) const { return coeffs_.at(residue); }
  std::vector<Rational>& row(std::uint64_t residue) { return coeffs_.at(residue); }

  bool is_zero() const {
    for (const auto& r : coeffs_)
      for (const auto& c : r)
        if (c != 0) return false;
    return true;
  }

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::uint64_t period_ = 1;
  unsigned degree_ = 0;
  std::vector<std::vector<Rational>> coeffs_{std::vector<Rational>{0}};
};

/// sum_m coeffs[n mod P][m] n^m.
inline Rational evaluate(const QuasiPolynomial& qp, const Integer& n) {
  Integer residue;
  mpz_fdiv_r_ui(residue.get_mpz_t(), n.get_mpz_t(), qp.period());
  const auto& row = qp.row(residue.get_ui());
  Rational acc = 0;
  for (std::size_t m = row.size(); m-- > 0;) acc = acc * Rational(n) + row[m];  // Horner
  return acc;
}

inline Rational evaluate(const QuasiPolynomial& qp, std::uint64_t n) {
  return evaluate(qp, Integer(static_cast<unsigned long>(n)));
}

/// One tuple of the box C with its dot product a.l and weight prod_s f_{D/a_s, l_s}.
struct IndexTerm {
  std::vector<std::uint64_t> l;
  std::uint64_t dot = 0;
  Integer weight;
};

/// Upper bounds k(D/a_s - 1) of the box C.
inline std::vector<std::uint64_t> index_bounds(const PartitionSpec& spec) {
  std::vector<std::uint64_t> out;
  for (auto a : spec.a()) out.push_back(spec.k() * (spec.D() / a - 1));
  return out;
}

/// Visits every tuple in the box prod_s [0, bounds_s] in odometer order
/// (last coordinate fastest).
inline void for_each_tuple(const std::vector<std::uint64_t>& bounds,
                           const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> t(bounds.size(), 0);
  while (true) {
    visit(t);
    std::size_t i = bounds.size();
    while (i > 0) {
      --i;
      if (t[i] < bounds[i]) {
        ++t[i];
        break;
      }
      t[i] = 0;
      if (i == 0) return;
    }
    if (bounds.empty()) return;
  }
}

inline Integer index_set_cardinality(const PartitionSpec& spec) {
  Integer c = 1;
  for (auto b : index_bounds(spec)) c *= Integer(static_cast<unsigned long>(b + 1));
  return c;
}

/// Every tuple of C with its weight, with f computed by the alternating
/// binomial formula. Zero-weight tuples are kept.
inline std::vector<IndexTerm> index_terms(const PartitionSpec& spec) {
  const auto bounds = index_bounds(spec);
  std::vector<std::vector<Integer>> f(spec.r());
  for (std::size_t s = 0; s < spec.r(); ++s)
    for (std::uint64_t l = 0; l <= bounds[s]; ++l)
      f[s].push_back(f_coefficient_formula(spec.D() / spec.a()[s], spec.k(), static_cast<std::int64_t>(l)));
  std::vector<IndexTerm> out;
  for_each_tuple(bounds, [&](const std::vector<std::uint64_t>& l) {
    IndexTerm term{l, 0, 1};
    for (std::size_t s = 0; s < l.size(); ++s) {
      term.dot += spec.a()[s] * l[s];
      term.weight *= f[s][l[s]];
    }
    out.push_back(std::move(term));
  });
  return out;
}

enum class BinomialMode {
  corrected,  // inner binomial C(t, m)
  literal,    // inner binomial C(k, m), literal form
};

namespace detail {

/// All d_m(n) for m = 0..rk-1 at one residue n mod D.
inline std::vector<Rational> coeff_d_row(const PartitionSpec& spec, const std::vector<IndexTerm>& terms,
                                         std::uint64_t n, BinomialMode mode) {
  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  std::vector<Rational> inv_d_pow(R);
  inv_d_pow[0] = 1;
  for (unsigned t = 1; t < R; ++t) inv_d_pow[t] = inv_d_pow[t - 1] / Rational(static_cast<unsigned long>(D));

  std::vector<Rational> row(R, 0);
  for (const auto& term : terms) {
    if (term.dot % D != n % D || term.weight == 0) continue;
    std::vector<Integer> dot_pow(R, 1);  // (a.l)^e with 0^0 = 1
    for (unsigned e = 1; e < R; ++e) dot_pow[e] = dot_pow[e - 1] * Integer(static_cast<unsigned long>(term.dot));
    for (unsigned m = 0; m < R; ++m) {
      Rational inner = 0;
      for (unsigned t = m; t < R; ++t) {
        Integer c = stirling_first_unsigned(R, t + 1) * dot_pow[t - m] *
                    (mode == BinomialMode::corrected ? binomial(t, m) : binomial(static_cast<std::int64_t>(spec.k()), m));
        if ((t - m) % 2) c = -c;
        inner += Rational(c) * inv_d_pow[t];
      }
      row[m] += Rational(term.weight) * inner;
    }
  }
  const Rational norm = Rational(factorial(R - 1));
  for (auto& x : row) x /= norm;
  return row;
}

}  // namespace detail

/// d_{k,a,m}(n) from the box-sum formula over C restricted to a.l = n (mod D).
inline Rational coeff_d(const PartitionSpec& spec, unsigned m, std::uint64_t n,
                        BinomialMode mode = BinomialMode::corrected) {
  if (m >= spec.rk()) throw std::out_of_range("coeff_d: m must lie in [0, rk-1]");
  return detail::coeff_d_row(spec, index_terms(spec), n, mode)[m];
}

enum class QuasiMethod {
  closed_form,  // box-sum coefficient formula, corrected binomial
  closed_form_literal,
  fit,  // interpolate oracle values residue by residue
};

inline QuasiPolynomial build_quasipolynomial(const PartitionSpec& spec, QuasiMethod method = QuasiMethod::closed_form) {
  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  QuasiPolynomial qp(D, R - 1);
  if (method == QuasiMethod::fit) {
    const auto table = count_series(spec, D * R + D);
    for (std::uint64_t s = 0; s < D; ++s) {
      RationalMatrix vandermonde(R, R);
      std::vector<Rational> rhs(R);
      for (unsigned t = 0; t < R; ++t) {
        const std::uint64_t x = s + t * D;
        Rational xp = 1;
        for (unsigned m = 0; m < R; ++m) {
          vandermonde(t, m) = xp;
          xp *= Rational(static_cast<unsigned long>(x));
        }
        rhs[t] = Rational(table.values[x]);
      }
      qp.row(s) = solve_exact(vandermonde, rhs);
    }
    return qp;
  }
  const auto mode = method == QuasiMethod::closed_form ? BinomialMode::corrected : BinomialMode::literal;
  const auto terms = index_terms(spec);
  for (std::uint64_t s = 0; s < D; ++s) qp.row(s) = detail::coeff_d_row(spec, terms, s, mode);
  return qp;
}

/// p_{a,k}(n) = 1/(rk-1)! * sum over l in C with a.l = n (mod D) of
/// weight(l) * prod_{t=1}^{rk-1} ((n - a.l)/D + t).
inline Integer count_closed_form(const PartitionSpec& spec, std::uint64_t n,
                                 const std::vector<IndexTerm>& terms) {
  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  Rational acc = 0;
  const Rational nn(static_cast<unsigned long>(n));
  for (const auto& term : terms) {
    if (term.dot % D != n % D || term.weight == 0) continue;
    const Rational x = (nn - Rational(static_cast<unsigned long>(term.dot))) / Rational(static_cast<unsigned long>(D));
    acc += Rational(term.weight) * rising_factorial(x, R);
  }
  acc /= Rational(factorial(R - 1));
  if (!is_integer(acc) || acc < 0)
    throw ConsistencyError("closed-form count is not a non-negative integer: " + to_string(acc) + " at n=" +
                           std::to_string(n) + " for " + spec.to_string());
  return acc.get_num();
}

inline Integer count_closed_form(const PartitionSpec& spec, std::uint64_t n) {
  return count_closed_form(spec, n, index_terms(spec));
}

}  // namespace mpart

#endif  // MPART_QUASIPOLY_HPP
