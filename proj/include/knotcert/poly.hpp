#pragma once

#include "knotcert/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace knotcert {

/// Dense univariate polynomial over Q, constant term first. The zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT: implicit scalar embedding
  Poly(const Rational& c);            // NOLINT
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<int> coeffs);

  static Poly monomial(const Rational& c, int k);
  static Poly t() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of t^k; zero outside the stored range.
  Rational operator[](int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational leading() const;

  Poly monic() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd with gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly u;    // s*a + u*b == gcd
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow_mod(Poly base, long long e, const Poly& m);
Poly pow(const Poly& p, int e);

Poly derivative(const Poly& p);

/// t^deg(p) * p(1/t); constant-term zeros are dropped first.
Poly reversed(const Poly& p);

/// Divides out the largest power of t.
Poly strip_t_power(const Poly& p, int* shift = nullptr);

/// Yun decomposition p = c * prod s_i^i with s_i monic squarefree, pairwise
/// coprime. Entries with s_i == 1 are omitted.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

/// Clears denominators and removes content; leading coefficient positive.
Poly primitive_integer(const Poly& p);

/// Rational roots by the rational root theorem (p need not be monic).
std::vector<Rational> rational_roots(const Poly& p);

/// Descending powers with explicit signs, e.g. "t^8+t^7-t^5-t^4-t^3+t+1".
std::string to_string(const Poly& p, const std::string& var = "t");

}  // namespace knotcert
