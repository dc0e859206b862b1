#pragma once

#include "knotcert/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace knotcert {

/// Euclidean-domain interface used by the generic elimination routines.
template <class Ring>
struct EuclideanTraits;

template <>
struct EuclideanTraits<Poly> {
  static int norm(const Poly& a) { return a.degree(); }
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    auto d = knotcert::divmod(a, b);
    return {std::move(d.quotient), std::move(d.remainder)};
  }
  static Poly exact_div(const Poly& a, const Poly& b) { return knotcert::exact_div(a, b); }
  /// Unit u with u * a canonical (monic).
  static Poly normalizing_unit(const Poly& a) { return Poly(Rational(1) / a.leading()); }
  static Poly unit_inverse(const Poly& u) { return Poly(Rational(1) / u[0]); }
};

template <>
struct EuclideanTraits<BigInt> {
  static BigInt norm(const BigInt& a) { return boost::multiprecision::abs(a); }
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    // floor-style so the remainder is nonnegative and smaller than |b|
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (r < 0) {
      if (b > 0) {
        q -= 1;
        r += b;
      } else {
        q += 1;
        r -= b;
      }
    }
    return {q, r};
  }
  static BigInt exact_div(const BigInt& a, const BigInt& b) { return a / b; }
  static BigInt normalizing_unit(const BigInt& a) { return a < 0 ? BigInt(-1) : BigInt(1); }
  static BigInt unit_inverse(const BigInt& u) { return u; }
};

/// Smith form D = left * input * right with left/right invertible and
/// diagonal entries canonical (monic / nonnegative) forming a divisibility
/// chain. The inverses are tracked alongside.
template <class Ring>
struct SmithForm {
  std::vector<Ring> diagonal;  // length min(rows, cols)
  MatrixX<Ring> left;
  MatrixX<Ring> right;
  MatrixX<Ring> left_inverse;
  MatrixX<Ring> right_inverse;
};

namespace detail {

template <class Ring>
class SmithReducer {
 public:
  using Traits = EuclideanTraits<Ring>;

  SmithReducer(MatrixX<Ring> a, bool track)
      : a_(std::move(a)), track_(track), m_(a_.rows()), n_(a_.cols()) {
    if (track_) {
      left_ = identity_matrix<Ring>(m_);
      left_inv_ = identity_matrix<Ring>(m_);
      right_ = identity_matrix<Ring>(n_);
      right_inv_ = identity_matrix<Ring>(n_);
    }
  }

  SmithForm<Ring> run() {
    const Eigen::Index steps = std::min(m_, n_);
    for (Eigen::Index k = 0; k < steps; ++k) {
      if (!reduce_step(k)) break;
    }
    SmithForm<Ring> out;
    out.diagonal.reserve(static_cast<std::size_t>(steps));
    for (Eigen::Index k = 0; k < steps; ++k) out.diagonal.push_back(a_(k, k));
    if (track_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
      out.left_inverse = std::move(left_inv_);
      out.right_inverse = std::move(right_inv_);
    }
    return out;
  }

 private:
  // Minimal-norm nonzero entry of the trailing block; ties by row then column.
  std::optional<std::pair<Eigen::Index, Eigen::Index>> find_pivot(Eigen::Index k) const {
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    for (Eigen::Index i = k; i < m_; ++i)
      for (Eigen::Index j = k; j < n_; ++j) {
        if (a_(i, j) == Ring(0)) continue;
        if (!best || Traits::norm(a_(i, j)) < Traits::norm(a_(best->first, best->second)))
          best = {i, j};
      }
    return best;
  }

  bool reduce_step(Eigen::Index k) {
    for (;;) {
      auto pivot = find_pivot(k);
      if (!pivot) return false;
      swap_rows(k, pivot->first);
      swap_cols(k, pivot->second);

      bool clean = true;
      for (Eigen::Index i = k + 1; i < m_; ++i) {
        if (a_(i, k) == Ring(0)) continue;
        auto [q, r] = Traits::divmod(a_(i, k), a_(k, k));
        add_row(i, k, -q);
        if (!(r == Ring(0))) clean = false;
      }
      for (Eigen::Index j = k + 1; j < n_; ++j) {
        if (a_(k, j) == Ring(0)) continue;
        auto [q, r] = Traits::divmod(a_(k, j), a_(k, k));
        add_col(j, k, -q);
        if (!(r == Ring(0))) clean = false;
      }
      if (!clean) continue;

      bool chain = true;
      for (Eigen::Index i = k + 1; i < m_ && chain; ++i)
        for (Eigen::Index j = k + 1; j < n_; ++j) {
          if (a_(i, j) == Ring(0)) continue;
          auto [q, r] = Traits::divmod(a_(i, j), a_(k, k));
          if (!(r == Ring(0))) {
            add_row(k, i, Ring(1));
            chain = false;
            break;
          }
        }
      if (!chain) continue;

      scale_row(k, Traits::normalizing_unit(a_(k, k)));
      return true;
    }
  }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.row(i).swap(a_.row(j));
    if (track_) {
      left_.row(i).swap(left_.row(j));
      left_inv_.col(i).swap(left_inv_.col(j));
    }
  }

  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a_.col(i).swap(a_.col(j));
    if (track_) {
      right_.col(i).swap(right_.col(j));
      right_inv_.row(i).swap(right_inv_.row(j));
    }
  }

  // row_i += c * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Ring& c) {
    if (c == Ring(0)) return;
    for (Eigen::Index col = 0; col < n_; ++col)
      if (!(a_(j, col) == Ring(0))) a_(i, col) += c * a_(j, col);
    if (track_) {
      for (Eigen::Index col = 0; col < m_; ++col)
        if (!(left_(j, col) == Ring(0))) left_(i, col) += c * left_(j, col);
      for (Eigen::Index row = 0; row < m_; ++row)
        if (!(left_inv_(row, i) == Ring(0))) left_inv_(row, j) -= left_inv_(row, i) * c;
    }
  }

  // col_i += c * col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Ring& c) {
    if (c == Ring(0)) return;
    for (Eigen::Index row = 0; row < m_; ++row)
      if (!(a_(row, j) == Ring(0))) a_(row, i) += a_(row, j) * c;
    if (track_) {
      for (Eigen::Index row = 0; row < n_; ++row)
        if (!(right_(row, j) == Ring(0))) right_(row, i) += right_(row, j) * c;
      for (Eigen::Index col = 0; col < n_; ++col)
        if (!(right_inv_(i, col) == Ring(0))) right_inv_(j, col) -= c * right_inv_(i, col);
    }
  }

  void scale_row(Eigen::Index i, const Ring& unit) {
    if (unit == Ring(1)) return;
    const Ring inv = EuclideanTraits<Ring>::unit_inverse(unit);
    for (Eigen::Index col = 0; col < n_; ++col) a_(i, col) = unit * a_(i, col);
    if (track_) {
      for (Eigen::Index col = 0; col < m_; ++col) left_(i, col) = unit * left_(i, col);
      for (Eigen::Index row = 0; row < m_; ++row) left_inv_(row, i) = left_inv_(row, i) * inv;
    }
  }

  MatrixX<Ring> a_;
  bool track_;
  Eigen::Index m_, n_;
  MatrixX<Ring> left_, right_, left_inv_, right_inv_;
};

}  // namespace detail

/// Smith normal form over a Euclidean domain. Pivots are chosen by minimal
/// norm, ties broken by lowest row then lowest column.
template <class Ring>
SmithForm<Ring> smith_form(const MatrixX<Ring>& a, bool track_transforms = true) {
  return detail::SmithReducer<Ring>(a, track_transforms).run();
}

/// Smith form of a Laurent polynomial matrix. Rows are first multiplied by
/// powers of t to land in Q[t]; those units are folded into the transforms.
struct SNFResult {
  std::vector<Poly> diagonal;
  PolyMatrix left_transform;
  PolyMatrix right_transform;
  PolyMatrix left_inverse;
  PolyMatrix right_inverse;

  /// Diagonal entries that are not units (and not zero).
  std::vector<Poly> nontrivial_factors() const;
  PolyMatrix diagonal_matrix(Eigen::Index rows, Eigen::Index cols) const;
};

SNFResult smith_normal_form(const PolyMatrix& m);

}  // namespace knotcert
