#pragma once

#include "knotcert/poly.hpp"

#include <optional>
#include <string>

namespace knotcert {

/// Element of Q[t, t^-1] stored as t^low * body with body(0) != 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Poly(c)) {}             // NOLINT
  LaurentPoly(const Rational& c) : LaurentPoly(Poly(c)) {} // NOLINT
  LaurentPoly(const Poly& body, int low = 0);              // NOLINT

  static LaurentPoly monomial(const Rational& c, int k) { return {Poly(c), k}; }
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + body_.degree(); }
  const Poly& body() const { return body_; }
  Rational coefficient(int k) const { return body_[k - low_]; }

  bool is_zero() const { return body_.is_zero(); }
  /// Units of the Laurent ring are c*t^k with c != 0.
  bool is_unit() const { return body_.degree() == 0; }

  /// Substitution t -> t^-1.
  LaurentPoly conjugate() const;

  /// Representative up to units: body made monic, low exponent 0.
  Poly normalized() const { return body_.monic(); }

  /// Present when every exponent is nonnegative.
  std::optional<Poly> to_poly() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const { return {-body_, low_}; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  int low_ = 0;
  Poly body_;
};

/// Unit-insensitive equality: a = c * t^k * b for some rational c != 0.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Representative of f in Q[t]/(m) (degree < deg m). Requires m(0) != 0 so
/// that t is invertible modulo m.
Poly reduce_mod(const LaurentPoly& f, const Poly& m);

std::string to_string(const LaurentPoly& f, const std::string& var = "t");

}  // namespace knotcert
