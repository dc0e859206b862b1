#include "knotcert/roots.hpp"

#include <stdexcept>

namespace knotcert {

bool is_reciprocal(const Poly& p) {
  if (p.is_zero()) return true;
  if (p[0] == 0) return false;
  const int d = p.degree();
  for (int k = 0; k <= d; ++k)
    if (p[k] != p[d - k]) return false;
  return true;
}

Poly trace_polynomial(const Poly& p) {
  if (!is_reciprocal(p) || p.degree() % 2 != 0)
    throw std::invalid_argument("trace_polynomial: not reciprocal of even degree");
  const int m = p.degree() / 2;
  // L_k(x) = t^k + t^-k with x = t + 1/t
  Poly l_prev = 2;
  Poly l_cur = Poly::t();
  Poly out = p[m];
  for (int k = 1; k <= m; ++k) {
    out += p[m + k] * l_cur;
    Poly l_next = Poly::t() * l_cur - l_prev;
    l_prev = std::move(l_cur);
    l_cur = std::move(l_next);
  }
  return out;
}

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero");
  chain_.push_back(squarefree_part(p));
  if (chain_.back().degree() <= 0) return;
  chain_.push_back(derivative(chain_.back()));
  while (chain_.back().degree() > 0) {
    Poly r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_of(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rational& a, const Rational& b) {
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  const SturmSequence sturm(p);
  const Poly& sq = sturm.base();
  if (sq(a) == 0 || sq(b) == 0) throw std::invalid_argument("isolate_real_roots: root at an endpoint");

  struct Pending {
    Rational lo, hi;
    int roots;
  };
  std::vector<Pending> stack{{a, b, sturm.count(a, b)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.roots == 0) continue;
    if (cur.roots == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / 2;
    if (sq(mid) == 0) {
      out.push_back({mid, mid});
      // Nudge the halves away from the exact root so endpoints stay nonzero.
      Rational left_hi = mid, right_lo = mid;
      Rational step = (cur.hi - cur.lo) / 4;
      for (;;) {
        left_hi = mid - step;
        right_lo = mid + step;
        if (sq(left_hi) != 0 && sq(right_lo) != 0 && sturm.count(left_hi, right_lo) == 1) break;
        step /= 2;
      }
      stack.push_back({right_lo, cur.hi, sturm.count(right_lo, cur.hi)});
      stack.push_back({cur.lo, left_hi, sturm.count(cur.lo, left_hi)});
      continue;
    }
    stack.push_back({mid, cur.hi, sturm.count(mid, cur.hi)});
    stack.push_back({cur.lo, mid, sturm.count(cur.lo, mid)});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

int count_unit_circle_roots(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Poly q = squarefree_part(strip_t_power(p));
  // Roots on the circle are shared with the reversal.
  q = poly_gcd(q, reversed(q));
  int count = 0;
  for (int s : {1, -1}) {
    const Poly linear = Poly::t() - Poly(s);
    if (q.degree() >= 1 && divides(linear, q)) {
      q = exact_div(q, linear);
      ++count;
    }
  }
  if (q.degree() <= 0) return count;
  q = q.monic();
  if (!is_reciprocal(q)) throw std::logic_error("count_unit_circle_roots: expected a reciprocal factor");
  const Poly trace = trace_polynomial(q);
  return count + 2 * SturmSequence(trace).count(Rational(-2), Rational(2));
}

}  // namespace knotcert
