#include "knotcert/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotcert {

LaurentPoly::LaurentPoly(const Poly& body, int low) {
  int shift = 0;
  body_ = strip_t_power(body, &shift);
  low_ = body_.is_zero() ? 0 : low + shift;
}

LaurentPoly LaurentPoly::conjugate() const {
  if (is_zero()) return {};
  return {reversed(body_), -high_exponent()};
}

std::optional<Poly> LaurentPoly::to_poly() const {
  if (is_zero()) return Poly();
  if (low_ < 0) return std::nullopt;
  return body_ * Poly::monomial(Rational(1), low_);
}

namespace {

// Aligns a and b to a common low exponent and returns the shifted bodies.
std::pair<Poly, Poly> align(const LaurentPoly& a, const LaurentPoly& b, int& low) {
  low = std::min(a.low_exponent(), b.low_exponent());
  Poly pa = a.body() * Poly::monomial(Rational(1), a.low_exponent() - low);
  Poly pb = b.body() * Poly::monomial(Rational(1), b.low_exponent() - low);
  return {std::move(pa), std::move(pb)};
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int low = 0;
  auto [a, b] = align(*this, o, low);
  return *this = LaurentPoly(a + b, low);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  int low = 0;
  auto [a, b] = align(*this, o, low);
  return *this = LaurentPoly(a - b, low);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  return *this = LaurentPoly(body_ * o.body_, low_ + o.low_);
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return a.normalized() == b.normalized();
}

Poly reduce_mod(const LaurentPoly& f, const Poly& m) {
  if (m.is_zero()) throw std::domain_error("reduction modulo zero");
  if (m[0] == 0) throw std::domain_error("t is not invertible modulo m");
  if (f.is_zero()) return {};
  Poly body = f.body() % m;
  const int k = f.low_exponent();
  if (k == 0) return body;
  if (k > 0) return (body * pow_mod(Poly::t(), k, m)) % m;
  const Poly t_inv = inverse_mod(Poly::t(), m);
  return (body * pow_mod(t_inv, -static_cast<long long>(k), m)) % m;
}

std::string to_string(const LaurentPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.high_exponent(); k >= f.low_exponent(); --k) {
    Rational c = f.coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const bool unit = (c == 1);
    if (!unit || k == 0) os << to_string(c);
    if (k != 0) {
      if (!unit) os << '*';
      os << var;
      if (k != 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace knotcert
