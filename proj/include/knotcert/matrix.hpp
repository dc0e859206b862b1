#pragma once

// Eigen containers over the exact scalar types. Only storage, block access
// and ring arithmetic are used; every decomposition is implemented by hand
// in exact_linalg.hpp / smith.hpp.

#include "knotcert/laurent.hpp"
#include "knotcert/rational.hpp"

#include <Eigen/Core>

#include <string>

namespace knotcert {

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int r) : re(r) {}               // NOLINT
  GaussianRational(const Rational& r) : re(r) {}   // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

}  // namespace knotcert

namespace Eigen {

template <class T>
struct ExactNumTraitsBase : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Nested = T;
  using Literal = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<knotcert::Poly> : ExactNumTraitsBase<knotcert::Poly> {};
template <>
struct NumTraits<knotcert::LaurentPoly> : ExactNumTraitsBase<knotcert::LaurentPoly> {};
template <>
struct NumTraits<knotcert::GaussianRational> : ExactNumTraitsBase<knotcert::GaussianRational> {};

}  // namespace Eigen

namespace knotcert {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<BigInt>;
using IntVector = VectorX<BigInt>;
using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;
using PolyMatrix = MatrixX<LaurentPoly>;
using PolyVector = VectorX<LaurentPoly>;
using QtMatrix = MatrixX<Poly>;
using HermitianMatrix = MatrixX<GaussianRational>;

/// Entrywise map between scalar types.
template <class To, class From, class Fn>
MatrixX<To> map_entries(const MatrixX<From>& m, Fn fn) {
  MatrixX<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = fn(m(i, j));
  return out;
}

template <class Scalar>
MatrixX<Scalar> identity_matrix(Eigen::Index n) {
  MatrixX<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

template <class Scalar>
MatrixX<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  MatrixX<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

/// Naive product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <class Scalar>
MatrixX<Scalar> multiply(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out = zero_matrix<Scalar>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PolyMatrix to_laurent(const IntMatrix& m);
PolyMatrix to_laurent(const QtMatrix& m);

/// Presentation matrix V^T - t V of the Alexander module.
PolyMatrix alexander_presentation(const IntMatrix& v);

/// Entrywise t -> t^-1 followed by transpose.
PolyMatrix conjugate_transpose(const PolyMatrix& m);

}  // namespace knotcert
