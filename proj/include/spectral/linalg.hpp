#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectral/scalar.hpp"

/// Exact dense linear algebra over Rational or Fp. Every routine is Gaussian
/// elimination with exact arithmetic; there is no tolerance anywhere.
namespace spectral::linalg {

template <class S>
struct RowEchelon {
  Matrix<S> reduced;               // reduced row echelon form
  std::vector<Index> pivot_cols;   // pivot column of row r is pivot_cols[r]
};

/// Reduced row echelon form. Among the candidate pivots of a column the entry of
/// smallest bit size is chosen, which keeps rational coefficients short.
template <class S>
RowEchelon<S> row_echelon(Matrix<S> m) {
  RowEchelon<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_cost = 0;
    for (Index i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const std::size_t cost = pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S factor = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Index>(row_echelon<S>(m).pivot_cols.size());
}

/// Basis of {x : m x = 0}, one column per free variable.
template <class S>
Matrix<S> nullspace(const Matrix<S>& m) {
  const Index cols = m.cols();
  if (m.rows() == 0) return Matrix<S>::Identity(cols, cols);
  const RowEchelon<S> ech = row_echelon<S>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  Matrix<S> basis = Matrix<S>::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    const Index col = static_cast<Index>(k);
    basis(f, col) = S(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      basis(ech.pivot_cols[r], col) = -ech.reduced(static_cast<Index>(r), f);
    }
  }
  return basis;
}

/// Indices of the lexicographically first maximal independent set of columns.
template <class S>
std::vector<Index> independent_columns(const Matrix<S>& m) {
  if (m.rows() == 0) return {};
  return row_echelon<S>(m).pivot_cols;
}

/// Solves a x = b column by column. Returns nullopt when inconsistent; when the
/// solution is not unique the free variables are set to zero.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  const Index n = a.cols();
  Matrix<S> aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  const RowEchelon<S> ech = row_echelon<S>(aug);
  Matrix<S> x = Matrix<S>::Zero(n, b.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const Index pc = ech.pivot_cols[r];
    if (pc >= n) return std::nullopt;
    for (Index j = 0; j < b.cols(); ++j) x(pc, j) = ech.reduced(static_cast<Index>(r), n + j);
  }
  return x;
}

template <class S>
bool in_column_span(const Matrix<S>& a, const Vector<S>& v) {
  return solve<S>(a, Matrix<S>(v)).has_value();
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  if (rank<S>(a) != n) return std::nullopt;
  return solve<S>(a, Matrix<S>::Identity(n, n));
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace spectral::linalg
