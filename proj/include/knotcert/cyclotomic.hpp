#pragma once

#include "knotcert/matrix.hpp"
#include "knotcert/poly.hpp"

#include <optional>
#include <vector>

namespace knotcert {

long long euler_phi(long long n);
int mobius(long long n);
std::vector<long long> distinct_prime_factors(long long n);
bool is_prime_power(long long n);
/// Prime powers q with 2 <= q <= bound, ascending.
std::vector<long long> prime_powers_up_to(long long bound);

/// n-th cyclotomic polynomial via the Moebius product of (t^d - 1).
/// Throws std::invalid_argument for n < 1.
Poly cyclotomic(long long n);

/// n with normalize(f) == Phi_n, searching phi(n) = deg f, n <= 2 deg^2.
std::optional<long long> recognize_cyclotomic(const Poly& f);

/// Largest n with phi(n) <= degree is at most this bound (phi(n) >= sqrt(n/2)).
long long cyclotomic_search_bound(int degree);

struct CyclotomicFactor {
  long long n;
  int multiplicity;
};

/// Divides out every Phi_n (n >= 1, within the search bound) accepted by
/// `select`, smallest n first, re-testing after each division.
template <class Pred>
std::vector<CyclotomicFactor> strip_cyclotomic(Poly& f, Pred select) {
  std::vector<CyclotomicFactor> out;
  if (f.degree() <= 0) return out;
  const long long bound = cyclotomic_search_bound(f.degree());
  for (long long n = 1; n <= bound && f.degree() > 0; ++n) {
    if (euler_phi(n) > f.degree() || !select(n)) continue;
    const Poly phi = cyclotomic(n);
    int mult = 0;
    while (f.degree() >= phi.degree()) {
      auto d = divmod(f, phi);
      if (!d.remainder.is_zero()) break;
      f = std::move(d.quotient);
      ++mult;
    }
    if (mult > 0) out.push_back({n, mult});
  }
  return out;
}

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n) x (m+n).
RationalMatrix sylvester_matrix(const Poly& f, const Poly& g);

/// Resultant res(f, g) = lead(f)^deg g * prod g(roots of f), computed by the
/// Euclidean remainder sequence. Throws when both inputs are zero.
Rational resultant(const Poly& f, const Poly& g);

}  // namespace knotcert
