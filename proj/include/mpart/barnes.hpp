// Bernoulli-Barnes numbers, the rkD x rkD determinant built from Bernoulli
// polynomial values B_j(v/D)/j, and the linear system that would recover the
// coefficient functions d_m from Bernoulli-Barnes numbers.
#ifndef MPART_BARNES_HPP
#define MPART_BARNES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mpart/linalg.hpp"
#include "mpart/numbers.hpp"
#include "mpart/oracle.hpp"
#include "mpart/quasipoly.hpp"

namespace mpart {

/// B_j(a) = sum over i_1+...+i_r = j of multinomial(j; i) prod_s B_{i_s} a_s^{i_s}.
/// Evaluated by peeling off one part at a time:
/// B_j(a_1..a_r) = sum_i C(j, i) B_i a_1^i B_{j-i}(a_2..a_r).
inline Rational bernoulli_barnes(const std::vector<std::uint64_t>& a, unsigned j) {
  // suffix[i] holds B_0..B_j of (a_i, ..., a_r); the empty suffix is 1, 0, 0, ...
  std::vector<Rational> suffix(j + 1, 0);
  suffix[0] = 1;
  for (std::size_t s = a.size(); s-- > 0;) {
    const Integer part(static_cast<unsigned long>(a[s]));
    std::vector<Rational> next(j + 1, 0);
    for (unsigned total = 0; total <= j; ++total)
      for (unsigned i = 0; i <= total; ++i)
        next[total] += Rational(binomial(total, i) * pow(part, i)) * bernoulli_number(i) * suffix[total - i];
    suffix = std::move(next);
  }
  return suffix[j];
}

/// The grouped double sum: outer compositions l of j over the r distinct
/// parts, inner compositions of each l_s into k Bernoulli indices.
inline Rational bernoulli_barnes_grouped(const PartitionSpec& spec, unsigned j) {
  const auto k = static_cast<std::size_t>(spec.k());
  // inner[l] = sum_{i_1+..+i_k = l} multinomial(l; i) B_{i_1}...B_{i_k}
  std::vector<Rational> inner(j + 1, 0);
  for (unsigned l = 0; l <= j; ++l) {
    for_each_composition(l, k, [&](const std::vector<unsigned>& idx) {
      Rational term(multinomial(l, idx));
      for (unsigned i : idx) term *= bernoulli_number(i);
      inner[l] += term;
    });
  }
  Rational acc = 0;
  for_each_composition(j, spec.r(), [&](const std::vector<unsigned>& l) {
    Rational term(multinomial(j, l));
    for (std::size_t s = 0; s < l.size(); ++s)
      term *= Rational(pow(Integer(static_cast<unsigned long>(spec.a()[s])), l[s])) * inner[l[s]];
    acc += term;
  });
  return acc;
}

/// Column index of unknown (m, v), v in [1, D], v fastest.
inline std::size_t delta_column(std::uint64_t D, unsigned m, std::uint64_t v) {
  return static_cast<std::size_t>(m * D + (v - 1));
}

/// Rows n = 0..rkD-1, columns (m, v): B_{n+m+1}(v/D) / (n+m+1), optionally
/// scaled by D^{n+m}.
inline RationalMatrix delta_matrix(const PartitionSpec& spec, bool with_d_powers = false) {
  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  const std::size_t size = static_cast<std::size_t>(R * D);
  RationalMatrix M(size, size);
  const Rational Dq(static_cast<unsigned long>(D));
  for (std::size_t n = 0; n < size; ++n) {
    for (unsigned m = 0; m < R; ++m) {
      const auto idx = static_cast<unsigned>(n + m + 1);
      const Rational scale = with_d_powers ? pow(Dq, idx - 1) : Rational(1);
      for (std::uint64_t v = 1; v <= D; ++v) {
        const Rational x = Rational(static_cast<unsigned long>(v)) / Dq;
        M(n, delta_column(D, m, v)) = scale * bernoulli_polynomial(idx, x) / Rational(idx);
      }
    }
  }
  return M;
}

inline Rational delta_determinant(const PartitionSpec& spec) { return determinant(delta_matrix(spec)); }

/// Outcome of assembling and solving the Bernoulli-Barnes system for the d_m.
struct DetyReport {
  Rational delta;         // determinant without the D^{n+m} factors
  Rational system_det;    // determinant of the assembled system
  bool singular = false;
  std::size_t size = 0;
  std::optional<std::vector<Rational>> solution;  // x_(m,v), column order of delta_column
  std::vector<Rational> reference;                // d_m(v mod D), same order
  std::vector<Rational> rhs;
  bool residual_zero = false;
  enum class Verdict { pass, fail, singular } verdict = Verdict::fail;
};

inline const char* to_string(DetyReport::Verdict v) {
  switch (v) {
    case DetyReport::Verdict::pass: return "PASS";
    case DetyReport::Verdict::fail: return "FAIL";
    case DetyReport::Verdict::singular: return "SINGULAR";
  }
  return "FAIL";
}

/// Equation n (0 <= n < rkD):
///   sum_{m,v} D^{n+m} B_{n+m+1}(v/D)/(n+m+1) x_(m,v)
///     = (-1)^{rk} n!/(n+rk)! B_{rk+n}(a[k]) - [n = 0].
/// The solution is compared against d_m(v mod D) from the corrected
/// closed form; agreement is reported, not assumed.
inline DetyReport dety_reconstruct(const PartitionSpec& spec) {
  DetyReport rep;
  const unsigned R = spec.rk();
  const std::uint64_t D = spec.D();
  rep.size = static_cast<std::size_t>(R * D);
  const auto M = delta_matrix(spec, true);
  rep.delta = delta_determinant(spec);
  rep.system_det = determinant(M);

  const auto parts = expand_ak(spec);
  rep.rhs.resize(rep.size);
  for (std::size_t n = 0; n < rep.size; ++n) {
    const auto nn = static_cast<unsigned>(n);
    Rational v = Rational(factorial(nn)) / Rational(factorial(nn + R)) * bernoulli_barnes(parts, R + nn);
    if (R % 2) v = -v;
    if (n == 0) v -= 1;
    rep.rhs[n] = v;
  }

  const auto qp = build_quasipolynomial(spec, QuasiMethod::closed_form);
  rep.reference.assign(rep.size, 0);
  for (unsigned m = 0; m < R; ++m)
    for (std::uint64_t v = 1; v <= D; ++v) rep.reference[delta_column(D, m, v)] = qp.coeff(v % D, m);

  try {
    rep.solution = solve_exact(M, rep.rhs);
  } catch (const SingularMatrixError&) {
    rep.singular = true;
    rep.verdict = DetyReport::Verdict::singular;
    return rep;
  }
  rep.residual_zero = (M * *rep.solution) == rep.rhs;
  rep.verdict = *rep.solution == rep.reference ? DetyReport::Verdict::pass : DetyReport::Verdict::fail;
  return rep;
}

}  // namespace mpart

#endif  // MPART_BARNES_HPP
