#pragma once

// Arbitrary-precision scalars. Both types are GMP-backed with expression
// templates disabled so they behave as plain values inside Eigen matrices.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace knotcert {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Exact rational equal to a finite double.
Rational rational_from_double(double x);

double to_double(const Rational& q);

}  // namespace knotcert
