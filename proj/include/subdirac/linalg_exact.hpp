#pragma once

#include <optional>
#include <vector>

#include "subdirac/rational.hpp"

namespace subdirac {

// Small exact-arithmetic helpers on rational matrices. These back the
// structural checks (rank, basis tests, projections); sizes are tiny so a
// plain fraction-based Gauss elimination is all that is needed.

inline Eigen::Index rank_exact(RationalMatrix m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(rank, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

// Solves A x = b exactly; empty optional when the system is inconsistent or
// underdetermined (A must have full column rank for a unique solution).
inline std::optional<RationalVector> solve_exact(RationalMatrix a, RationalVector b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.row(rank).swap(a.row(pivot));
    std::swap(b[rank], b[pivot]);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      Rational f = a(r, col) / a(rank, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < cols) return std::nullopt;
  for (Eigen::Index r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return std::nullopt;
  RationalVector x(cols);
  for (Eigen::Index i = 0; i < cols; ++i) x[i] = Rational(0);
  for (Eigen::Index i = 0; i < rank; ++i) x[pivot_col[i]] = b[i] / a(i, pivot_col[i]);
  return x;
}

inline std::optional<RationalMatrix> inverse_exact(const RationalMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalVector e(n);
    for (Eigen::Index i = 0; i < n; ++i) e[i] = Rational(i == j ? 1 : 0);
    auto col = solve_exact(a, e);
    if (!col) return std::nullopt;
    inv.col(j) = *col;
  }
  return inv;
}

}  // namespace subdirac
