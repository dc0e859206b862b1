#include "knotcert/signature.hpp"

#include "knotcert/cyclotomic.hpp"
#include "knotcert/parallel.hpp"
#include "knotcert/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace knotcert {

CirclePoint CirclePoint::from_parameter(const Rational& u) {
  if (u == 0) throw std::invalid_argument("omega = 1 is excluded");
  CirclePoint p;
  p.u_ = u;
  return p;
}

GaussianRational CirclePoint::value() const {
  if (!u_) return {Rational(-1), Rational(0)};
  const Rational& u = *u_;
  const Rational den = 1 + u * u;
  return {(1 - u * u) / den, 2 * u / den};
}

double CirclePoint::angle() const {
  if (!u_) return std::numbers::pi;
  const double a = 2.0 * std::atan(to_double(*u_));
  return a > 0 ? a : a + 2.0 * std::numbers::pi;
}

int hermitian_signature(HermitianMatrix h) {
  int signature = 0;
  while (h.rows() > 0) {
    const Eigen::Index n = h.rows();
    Eigen::Index pivot = -1;
    for (Eigen::Index k = 0; k < n; ++k)
      if (h(k, k).re != 0) {
        pivot = k;
        break;
      }
    if (pivot >= 0) {
      const GaussianRational p = h(pivot, pivot);
      signature += sign_of(p.re);
      HermitianMatrix next(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == pivot) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == pivot) continue;
          next(rr, cc++) = h(r, c) - h(r, pivot) * h(pivot, c) / p;
        }
        ++rr;
      }
      h = std::move(next);
      continue;
    }
    // Zero diagonal: a nonzero off-diagonal entry a gives the block
    // [[0, a], [conj a, 0]] of signature zero.
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = 0; i < n && bi < 0; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!h(i, j).is_zero()) {
          bi = i;
          bj = j;
          break;
        }
    if (bi < 0) break;
    const GaussianRational a = h(bi, bj);
    const GaussianRational a_conj = h(bj, bi);
    HermitianMatrix next(n - 2, n - 2);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
      if (r == bi || r == bj) continue;
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == bi || c == bj) continue;
        next(rr, cc++) = h(r, c) - (h(r, bj) * h(bi, c) / a + h(r, bi) * h(bj, c) / a_conj);
      }
      ++rr;
    }
    h = std::move(next);
  }
  return signature;
}

int levine_tristram(const SeifertMatrix& s, const CirclePoint& omega) {
  const GaussianRational w = omega.value();
  const GaussianRational one_minus = GaussianRational(1) - w;
  const GaussianRational one_minus_conj = one_minus.conj();
  const Eigen::Index n = s.size();
  HermitianMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = one_minus * GaussianRational(Rational(s(i, j))) +
                one_minus_conj * GaussianRational(Rational(s(j, i)));
  return hermitian_signature(std::move(h));
}

RhoValue RhoValue::from_exact(const Rational& q) {
  RhoValue v;
  v.exact = q;
  v.midpoint = to_double(q);
  v.radius = 0.0;
  return v;
}

RhoValue RhoValue::from_interval(double mid, double rad) {
  RhoValue v;
  v.midpoint = mid;
  v.radius = rad;
  return v;
}

int RhoValue::certified_sign() const {
  if (exact) return sign_of(*exact);
  if (std::abs(midpoint) > radius) return midpoint > 0 ? 1 : -1;
  return 0;
}

std::string RhoValue::to_string() const {
  if (exact) return knotcert::to_string(*exact);
  std::ostringstream os;
  os.precision(15);
  os << midpoint << " +- " << radius;
  return os.str();
}

RhoValue operator+(const RhoValue& a, const RhoValue& b) {
  if (a.exact && b.exact) return RhoValue::from_exact(*a.exact + *b.exact);
  const double pad = 4e-16 * (std::abs(a.midpoint) + std::abs(b.midpoint));
  return RhoValue::from_interval(a.midpoint + b.midpoint, a.radius + b.radius + pad);
}

RhoValue operator-(const RhoValue& a) {
  if (a.exact) return RhoValue::from_exact(-*a.exact);
  return RhoValue::from_interval(-a.midpoint, a.radius);
}

namespace {

constexpr double kJumpTolerance = 1e-12;
constexpr double kThinArc = 1e-9;
constexpr double kAnglePad = 1e-15;

// Angle in [0, pi] of the circle point with t + 1/t = x.
double angle_of(const Rational& x) {
  if (x <= -2) return std::numbers::pi;
  if (x >= 2) return 0.0;
  const Rational ratio = (2 - x) / (2 + x);
  return 2.0 * std::atan(std::sqrt(to_double(ratio)));
}

// x-coordinate t + 1/t of the circle point with parameter u.
Rational trace_of_parameter(const Rational& u) { return 2 * (1 - u * u) / (1 + u * u); }

// Positive rational u whose trace lies strictly inside (gap_lo, gap_hi).
Rational sample_parameter(const Rational& gap_lo, const Rational& gap_hi) {
  auto inside = [&](const Rational& x) { return gap_lo < x && x < gap_hi; };
  Rational lo(0), hi(1);
  for (;;) {
    const Rational x = trace_of_parameter(hi);
    if (inside(x)) return hi;
    if (x >= gap_hi) {
      lo = hi;
      hi *= 2;
      continue;
    }
    break;
  }
  for (;;) {
    const Rational mid = (lo + hi) / 2;
    const Rational x = trace_of_parameter(mid);
    if (inside(x)) return mid;
    if (x >= gap_hi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

struct Jump {
  RootInterval trace;  // enclosure of t + 1/t
  double lo_angle;
  double hi_angle;
  std::optional<Rational> turns;
};

std::vector<Jump> locate_jumps(const Poly& delta) {
  std::vector<Jump> jumps;
  if (delta.degree() <= 0) return jumps;
  Poly q = poly_gcd(squarefree_part(delta), reversed(squarefree_part(delta)));
  for (int s : {1, -1}) {
    const Poly linear = Poly::t() - Poly(s);
    if (q.degree() >= 1 && divides(linear, q)) q = exact_div(q, linear);
  }
  if (q.degree() <= 0) return jumps;
  const Poly trace = trace_polynomial(q.monic());
  auto roots = isolate_real_roots(trace, Rational(-2), Rational(2));
  // descending trace = ascending angle
  std::reverse(roots.begin(), roots.end());
  const Poly base = SturmSequence(trace).base();
  for (auto& iv : roots)
    iv = refine_root(base, iv, [](const RootInterval& r) { return angle_of(r.lo) - angle_of(r.hi) > kJumpTolerance; });
  // Neighbouring enclosures (and the ends +-2) must be strictly separated so
  // every arc keeps a nonempty trace gap to sample from.
  auto halve = [&](RootInterval& iv) {
    iv = refine_root(base, iv, [w = (iv.hi - iv.lo) / 2](const RootInterval& r) { return r.hi - r.lo > w; });
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i == 0)
      while (roots[i].hi >= Rational(2)) halve(roots[i]);
    else
      while (roots[i].hi >= roots[i - 1].lo) {
        halve(roots[i]);
        halve(roots[i - 1]);
      }
  }
  if (!roots.empty())
    while (roots.back().lo <= Rational(-2)) halve(roots.back());
  for (const auto& iv : roots)
    jumps.push_back({iv, angle_of(iv.hi) - kAnglePad, angle_of(iv.lo) + kAnglePad, std::nullopt});

  // Exact angles when every circle root is a root of unity.
  Poly residual = delta;
  const auto factors = strip_cyclotomic(residual, [](long long) { return true; });
  if (count_unit_circle_roots(residual) != 0) return jumps;
  std::vector<Rational> turns;
  for (const auto& f : factors) {
    if (f.n <= 2) continue;
    for (long long k = 1; 2 * k < f.n; ++k)
      if (std::gcd(k, f.n) == 1) turns.push_back(make_rational(BigInt(2 * k), BigInt(f.n)));
  }
  std::sort(turns.begin(), turns.end());
  if (turns.size() != jumps.size()) return jumps;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    const double a = to_double(turns[i]) * std::numbers::pi;
    if (a < jumps[i].lo_angle - 1e-9 || a > jumps[i].hi_angle + 1e-9) return jumps;
  }
  for (std::size_t i = 0; i < turns.size(); ++i) jumps[i].turns = turns[i];
  return jumps;
}

}  // namespace

SignatureProfile signature_profile(const SeifertMatrix& s) {
  const Poly delta = alexander_polynomial(s).body();
  const auto jumps = locate_jumps(delta);

  struct Gap {
    Rational lo, hi;  // trace bounds
    double start, end;
    std::optional<Rational> start_turns, end_turns;
  };
  std::vector<Gap> gaps;
  Rational upper(2);
  double start = 0.0;
  double previous_edge = 0.0;
  std::optional<Rational> start_turns = Rational(0);
  for (const auto& j : jumps) {
    if (j.lo_angle - previous_edge < kThinArc) throw ThinArcError("signature arc thinner than 1e-9");
    previous_edge = j.hi_angle;
    gaps.push_back({j.trace.hi, upper, start, (j.lo_angle + j.hi_angle) / 2, start_turns, j.turns});
    upper = j.trace.lo;
    start = (j.lo_angle + j.hi_angle) / 2;
    start_turns = j.turns;
  }
  if (std::numbers::pi - previous_edge < kThinArc) throw ThinArcError("signature arc thinner than 1e-9");
  gaps.push_back({Rational(-2), upper, start, std::numbers::pi, start_turns, Rational(1)});

  auto arcs = parallel_map(gaps.size(), [&](std::size_t i) {
    const Gap& g = gaps[i];
    SignatureArc arc;
    arc.start = g.start;
    arc.end = g.end;
    arc.start_turns = g.start_turns;
    arc.end_turns = g.end_turns;
    arc.sample_parameter = sample_parameter(g.lo, g.hi);
    arc.signature = levine_tristram(s, CirclePoint::from_parameter(arc.sample_parameter));
    return arc;
  });

  SignatureProfile profile;
  profile.arcs = std::move(arcs);
  for (const auto& j : jumps) profile.jump_uncertainty = std::max(profile.jump_uncertainty, j.hi_angle - j.lo_angle);
  return profile;
}

RhoValue rho_zero(const SeifertMatrix& s) {
  const SignatureProfile profile = signature_profile(s);
  const bool exact = std::all_of(profile.arcs.begin(), profile.arcs.end(), [](const SignatureArc& a) {
    return a.start_turns.has_value() && a.end_turns.has_value();
  });
  if (exact) {
    Rational total(0);
    for (const auto& a : profile.arcs) total += a.signature * (*a.end_turns - *a.start_turns);
    return RhoValue::from_exact(total);
  }
  double mid = 0.0;
  double radius = 1e-12;
  for (std::size_t i = 0; i < profile.arcs.size(); ++i) {
    const auto& a = profile.arcs[i];
    mid += a.signature * (a.end - a.start) / std::numbers::pi;
    if (i + 1 < profile.arcs.size()) {
      const int jump = std::abs(a.signature - profile.arcs[i + 1].signature);
      radius += jump * profile.jump_uncertainty / (2.0 * std::numbers::pi);
    }
  }
  return RhoValue::from_interval(mid, radius);
}

}  // namespace knotcert
