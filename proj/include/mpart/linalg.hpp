// Dense exact linear algebra over the rationals. Rows are cleared of
// denominators first, then eliminated fraction-free (Bareiss) over the
// integers, so intermediate entries stay integral and bounded by minors.
#ifndef MPART_LINALG_HPP
#define MPART_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpart/numbers.hpp"

namespace mpart {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("RationalMatrix: dimensions must be positive");
  }

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init)
      : RationalMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> operator*(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("RationalMatrix: dimension mismatch");
    std::vector<Rational> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t size)
      : std::runtime_error("singular matrix: rank " + std::to_string(rank) + " of " + std::to_string(size)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

namespace detail {

/// Integer rows obtained by scaling each rational row (optionally with an
/// appended right-hand side) by the lcm of its denominators.
struct ScaledSystem {
  std::vector<std::vector<Integer>> rows;
  Rational row_scale_product = 1;
};

inline ScaledSystem clear_denominators(const RationalMatrix& m, const std::vector<Rational>* rhs) {
  ScaledSystem out;
  out.rows.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
    auto& row = out.rows[i];
    row.reserve(m.cols() + (rhs ? 1 : 0));
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_num() * (scale / m(i, j).get_den()));
    if (rhs) row.push_back((*rhs)[i].get_num() * (scale / (*rhs)[i].get_den()));
    out.row_scale_product *= scale;
  }
  return out;
}

/// In-place Bareiss elimination on the first `ncols` columns. Returns the
/// rank and the sign of the row permutation; rows[0..rank) end up in echelon
/// form with pivots in `pivot_cols`.
struct BareissResult {
  std::size_t rank = 0;
  int permutation_sign = 1;
  std::vector<std::size_t> pivot_cols;
};

inline BareissResult bareiss(std::vector<std::vector<Integer>>& rows, std::size_t ncols) {
  BareissResult res;
  const std::size_t n = rows.size();
  Integer prev = 1;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < ncols && pr < n; ++col) {
    std::size_t piv = pr;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != pr) {
      std::swap(rows[piv], rows[pr]);
      res.permutation_sign = -res.permutation_sign;
    }
    for (std::size_t i = pr + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < rows[i].size(); ++j) {
        rows[i][j] = rows[pr][col] * rows[i][j] - rows[i][col] * rows[pr][j];
        mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = rows[pr][col];
    res.pivot_cols.push_back(col);
    ++pr;
  }
  res.rank = pr;
  return res;
}

}  // namespace detail

/// Exact determinant of a square matrix.
inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  auto sys = detail::clear_denominators(m, nullptr);
  auto res = detail::bareiss(sys.rows, m.cols());
  if (res.rank < m.rows()) return 0;
  Rational det(sys.rows.back().back());
  det *= res.permutation_sign;
  return det / sys.row_scale_product;
}

/// Rank of an arbitrary matrix.
inline std::size_t rank(const RationalMatrix& m) {
  auto sys = detail::clear_denominators(m, nullptr);
  return detail::bareiss(sys.rows, m.cols()).rank;
}

/// Unique solution of Mx = b. Throws SingularMatrixError carrying the rank.
inline std::vector<Rational> solve_exact(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_exact: matrix must be square");
  if (b.size() != m.rows()) throw std::invalid_argument("solve_exact: right-hand side has wrong length");
  const std::size_t n = m.rows();
  auto sys = detail::clear_denominators(m, &b);
  auto res = detail::bareiss(sys.rows, n);
  if (res.rank < n) throw SingularMatrixError(res.rank, n);
  std::vector<Rational> x(n, 0);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(sys.rows[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(sys.rows[ii][j]) * x[j];
    x[ii] = acc / Rational(sys.rows[ii][ii]);
  }
  return x;
}

}  // namespace mpart

#endif  // MPART_LINALG_HPP
