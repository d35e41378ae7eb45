#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "plectic/errors.hpp"
#include "plectic/ratfn.hpp"

namespace plectic {

/// Dense row-major matrix over an exact field (Rational or RationalFn).
template <class Scalar>
using Matrix = std::vector<std::vector<Scalar>>;

inline Rational field_inverse(const Rational& q) {
  if (is_zero(q)) throw DivisionByZero("inverse of zero rational");
  return Rational(1 / q);
}
inline RationalFn field_inverse(const RationalFn& f) { return f.inverse(); }

template <class Scalar>
struct UniqueSolution {
  std::vector<Scalar> x;
};
struct NoSolution {};
struct NonUniqueSolution {};

template <class Scalar>
using SolveResult = std::variant<UniqueSolution<Scalar>, NoSolution, NonUniqueSolution>;

/// Reduced row echelon form together with its pivot columns.
template <class Scalar>
struct Echelon {
  Matrix<Scalar> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The pivot is the first nonzero entry at or below
/// the current row, scanning columns left to right.
template <class Scalar>
Echelon<Scalar> row_reduce(Matrix<Scalar> a) {
  Echelon<Scalar> out;
  out.cols = a.empty() ? 0 : a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < out.cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && is_zero(a[pivot][col])) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    const Scalar inv = field_inverse(a[row][col]);
    for (std::size_t j = col; j < out.cols; ++j) {
      if (!is_zero(a[row][j])) a[row][j] *= inv;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const Scalar factor = a[r][col];
      for (std::size_t j = col; j < out.cols; ++j) {
        if (is_zero(a[row][j])) continue;
        Scalar delta = factor * a[row][j];
        a[r][j] -= delta;
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rows = std::move(a);
  return out;
}

/// Basis of the right kernel {x : A x = 0}, one vector per free column.
template <class Scalar>
std::vector<std::vector<Scalar>> nullspace(const Echelon<Scalar>& e,
                                           const Scalar& zero,
                                           const Scalar& one) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(e.cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact solve of A x = b over the field of the entries.
template <class Scalar>
SolveResult<Scalar> solve_linear(const Matrix<Scalar>& a,
                                 const std::vector<Scalar>& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("solve_linear: row count of A does not match b");
  }
  if (a.empty()) return NonUniqueSolution{};
  const std::size_t cols = a.front().size();
  Matrix<Scalar> augmented = a;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (augmented[r].size() != cols) {
      throw InvalidInput("solve_linear: ragged matrix");
    }
    augmented[r].push_back(b[r]);
  }
  Echelon<Scalar> e = row_reduce(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == cols) return NoSolution{};
  if (e.rank() < cols) return NonUniqueSolution{};
  std::vector<Scalar> x;
  x.reserve(cols);
  for (std::size_t r = 0; r < cols; ++r) x.push_back(e.rows[r][cols]);
  return UniqueSolution<Scalar>{std::move(x)};
}

}  // namespace plectic
