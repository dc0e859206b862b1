#pragma once

// Exact real-root isolation (Sturm sequences) and the reduction of
// unit-circle roots of reciprocal polynomials to real roots in (-2, 2).

#include "knotcert/poly.hpp"

#include <vector>

namespace knotcert {

/// p(t) == t^deg p(1/t).
bool is_reciprocal(const Poly& p);

/// For reciprocal p of degree 2m: the degree-m polynomial T with
/// p(t) = t^m T(t + 1/t). Throws std::invalid_argument otherwise.
Poly trace_polynomial(const Poly& p);

/// Closed interval [lo, hi] holding exactly one root; lo == hi for a root
/// found exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
};

class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);  // p is made squarefree first
  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  const Poly& base() const { return chain_.front(); }

 private:
  int sign_changes(const Rational& x) const;
  std::vector<Poly> chain_;
};

/// Isolating intervals for the distinct real roots of p in the open interval
/// (a, b), ascending. p(a), p(b) must be nonzero.
std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rational& a, const Rational& b);

/// Shrinks an isolating interval of a squarefree p until `wide` says stop.
template <class Pred>
RootInterval refine_root(const Poly& p, RootInterval iv, Pred wide) {
  while (iv.lo != iv.hi && wide(iv)) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const Rational at_mid = p(mid);
    if (at_mid == 0) return {mid, mid};
    if (sign_of(p(iv.lo)) * sign_of(at_mid) < 0) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

/// Distinct roots of p with |t| = 1.
int count_unit_circle_roots(const Poly& p);

}  // namespace knotcert
