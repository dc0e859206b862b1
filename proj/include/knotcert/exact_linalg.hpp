#pragma once

#include "knotcert/smith.hpp"

#include <stdexcept>
#include <vector>

namespace knotcert {

/// Bareiss fraction-free determinant over an integral domain with exact
/// division (Ring = BigInt or Poly).
template <class Ring>
Ring bareiss_determinant(MatrixX<Ring> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Ring(1);
  Ring prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Ring(0)) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!(a(i, k) == Ring(0))) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return Ring(0);
      a.row(k).swap(a.row(swap_with));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = EuclideanTraits<Ring>::exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  Ring det = a(n - 1, n - 1);
  return negate ? Ring(-det) : det;
}

/// Cofactor (Laplace) expansion along the first row; intended for n <= 4.
template <class Scalar>
Scalar cofactor_determinant(const MatrixX<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (a(0, j) == Scalar(0)) continue;
    MatrixX<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    Scalar term = a(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Solution of a * x = rhs scaled by det(a): returns det and X = det * a^-1 * rhs,
/// both exact over Ring. Throws if a is singular.
template <class Ring>
struct ScaledSolution {
  Ring determinant;
  MatrixX<Ring> scaled;
};

template <class Ring>
ScaledSolution<Ring> fraction_free_solve(const MatrixX<Ring>& a, const MatrixX<Ring>& rhs) {
  using Traits = EuclideanTraits<Ring>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || rhs.rows() != n) throw std::invalid_argument("shape mismatch in solve");
  const Eigen::Index m = rhs.cols();
  MatrixX<Ring> aug(n, n + m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (Eigen::Index j = 0; j < m; ++j) aug(i, n + j) = rhs(i, j);
  }
  Ring prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (aug(k, k) == Ring(0)) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!(aug(i, k) == Ring(0))) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) throw std::domain_error("singular matrix in fraction-free solve");
      aug.row(k).swap(aug.row(swap_with));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n + m; ++j)
        aug(i, j) = Traits::exact_div(aug(i, j) * aug(k, k) - aug(i, k) * aug(k, j), prev);
      aug(i, k) = Ring(0);
    }
    prev = aug(k, k);
  }
  // Bareiss leaves the determinant (up to the swap sign) in the last pivot.
  const Ring det_unsigned = aug(n - 1, n - 1);
  ScaledSolution<Ring> out{negate ? Ring(-det_unsigned) : det_unsigned, MatrixX<Ring>(n, m)};
  for (Eigen::Index c = 0; c < m; ++c) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Ring acc = out.determinant * aug(i, n + c);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= aug(i, j) * out.scaled(j, c);
      out.scaled(i, c) = Traits::exact_div(acc, aug(i, i));
    }
  }
  return out;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class Field>
std::vector<Eigen::Index> rref_in_place(MatrixX<Field>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (!(a(i, col) == Field(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.row(row).swap(a.row(p));
    const Field inv = Field(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Field(0)) continue;
      const Field f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
Eigen::Index exact_rank(MatrixX<Field> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Basis of the right kernel {x : a x = 0}, one column per basis vector.
template <class Field>
MatrixX<Field> exact_nullspace(MatrixX<Field> a) {
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  MatrixX<Field> basis = zero_matrix<Field>(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -a(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Determinant of a square Laurent matrix: cofactor expansion up to 4x4,
/// Bareiss over Q[t] (after clearing negative powers row by row) above.
LaurentPoly det_laurent(const PolyMatrix& m);

}  // namespace knotcert
