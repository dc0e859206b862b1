#include "knotcert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace knotcert {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: " + std::string(text));
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(num, den);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 significant bits
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(scaled)};
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace knotcert
