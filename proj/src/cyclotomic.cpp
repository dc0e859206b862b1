#include "knotcert/cyclotomic.hpp"

#include <stdexcept>

namespace knotcert {

std::vector<long long> distinct_prime_factors(long long n) {
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n < 1");
  long long result = n;
  for (long long p : distinct_prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int mobius(long long n) {
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool is_prime_power(long long n) { return n >= 2 && distinct_prime_factors(n).size() == 1; }

std::vector<long long> prime_powers_up_to(long long bound) {
  std::vector<long long> out;
  for (long long q = 2; q <= bound; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

Poly cyclotomic(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  Poly numerator = 1;
  Poly denominator = 1;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    Poly factor = Poly::monomial(Rational(1), static_cast<int>(d)) - Poly(1);
    if (mu > 0) {
      numerator *= factor;
    } else {
      denominator *= factor;
    }
  }
  return exact_div(numerator, denominator);
}

long long cyclotomic_search_bound(int degree) {
  if (degree < 1) return 0;
  return std::max<long long>(2, 2LL * degree * degree);
}

std::optional<long long> recognize_cyclotomic(const Poly& f) {
  if (f.degree() < 1) return std::nullopt;
  const Poly target = f.monic();
  const long long bound = cyclotomic_search_bound(f.degree());
  for (long long n = 1; n <= bound; ++n) {
    if (euler_phi(n) != f.degree()) continue;
    const Poly tn_minus_1 = Poly::monomial(Rational(1), static_cast<int>(n)) - Poly(1);
    if (!divides(target, tn_minus_1)) continue;
    if (cyclotomic(n) == target) return n;
  }
  return std::nullopt;
}

RationalMatrix sylvester_matrix(const Poly& f, const Poly& g) {
  const int m = std::max(f.degree(), 0);
  const int n = std::max(g.degree(), 0);
  const int size = m + n;
  RationalMatrix s = zero_matrix<Rational>(size, size);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s(row, row + k) = f[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s(n + row, row + k) = g[n - k];
  return s;
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) {
    const Poly& other = f.is_zero() ? g : f;
    return other.degree() == 0 ? Rational(1) : Rational(0);
  }
  Poly a = f;
  Poly b = g;
  Rational acc(1);
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Rational r(1);
      for (int i = 0; i < m; ++i) r *= b[0];
      return acc * r;
    }
    if (m == 0) {
      Rational r(1);
      for (int i = 0; i < n; ++i) r *= a[0];
      return acc * r;
    }
    Poly rem = a % b;
    if (rem.is_zero()) return Rational(0);
    // res(a, b) = (-1)^{mn} lead(b)^{m - deg rem} res(b, rem)
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    const Rational lb = b.leading();
    for (int i = 0; i < m - rem.degree(); ++i) acc *= lb;
    a = std::move(b);
    b = std::move(rem);
  }
}

}  // namespace knotcert
