#include "knotcert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotcert {

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::monomial(const Rational& c, int k) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Rational(1) / leading();
  return r;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> z) const {
  std::complex<double> acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = 1, s1 = 0;
  Poly u0 = 0, u1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0, inv * u0};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  auto e = extended_gcd(a % m, m);
  if (e.gcd != Poly(1)) throw std::domain_error("polynomial not invertible modulo m");
  return e.s % m;
}

Poly pow_mod(Poly base, long long e, const Poly& m) {
  Poly result = Poly(1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

Poly pow(const Poly& p, int e) {
  Poly result = 1;
  for (int i = 0; i < e; ++i) result *= p;
  return result;
}

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> d(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) d[static_cast<std::size_t>(k - 1)] = p[k] * k;
  return Poly(std::move(d));
}

Poly strip_t_power(const Poly& p, int* shift) {
  int k = 0;
  while (k <= p.degree() && p[k] == 0) ++k;
  if (shift) *shift = p.is_zero() ? 0 : k;
  if (p.is_zero() || k == 0) return p;
  std::vector<Rational> c(p.coefficients().begin() + k, p.coefficients().end());
  return Poly(std::move(c));
}

Poly reversed(const Poly& p) {
  Poly q = strip_t_power(p);
  std::vector<Rational> c = q.coefficients();
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly df = derivative(f);
  Poly a = poly_gcd(f, df);
  Poly b = exact_div(f, a);
  Poly d = exact_div(df, a) - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    Poly b2 = exact_div(b, g);
    Poly c2 = exact_div(d, g);
    d = c2 - derivative(b2);
    b = std::move(b2);
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return Poly(p.is_zero() ? 0 : 1);
  return exact_div(p, poly_gcd(p, derivative(p))).monic();
}

Poly primitive_integer(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    const BigInt d = denominator_of(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  BigInt content = 0;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    const BigInt n = numerator_of(c * Rational(lcm_den));
    content = boost::multiprecision::gcd(content, boost::multiprecision::abs(n));
  }
  Rational scale = Rational(lcm_den) / Rational(content);
  if (p.leading() < 0) scale = -scale;
  return scale * p;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  int shift = 0;
  Poly q = primitive_integer(strip_t_power(p, &shift));
  if (shift > 0) roots.emplace_back(0);
  if (q.degree() <= 0) return roots;
  const BigInt a0 = numerator_of(q[0]);
  const BigInt an = numerator_of(q.leading());
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(an)) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      for (int s : {1, -1}) {
        Rational r = make_rational(num * s, den);
        if (q(r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p[k];
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
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace knotcert
