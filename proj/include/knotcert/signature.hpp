#pragma once

#include "knotcert/seifert.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

/// Rational point of the unit circle, omega = ((1 - u^2) + 2u i) / (1 + u^2),
/// or omega = -1. omega = 1 (u = 0) is rejected.
class CirclePoint {
 public:
  static CirclePoint from_parameter(const Rational& u);
  static CirclePoint minus_one() { return CirclePoint(); }

  bool is_minus_one() const { return !u_.has_value(); }
  const std::optional<Rational>& parameter() const { return u_; }
  GaussianRational value() const;
  /// Angle in (0, 2*pi).
  double angle() const;

 private:
  CirclePoint() = default;
  std::optional<Rational> u_;
};

/// Signature of an exact Hermitian matrix by congruence diagonalization,
/// using 2x2 block pivots when every diagonal entry vanishes.
int hermitian_signature(HermitianMatrix h);

/// Signature of (1 - omega) V + (1 - conj(omega)) V^T.
int levine_tristram(const SeifertMatrix& s, const CirclePoint& omega);

/// rho_0 = normalized integral of the signature function over the circle.
/// Exact when every jump of the signature sits at a root of unity, otherwise
/// a validated enclosure.
struct RhoValue {
  std::optional<Rational> exact;
  double midpoint = 0.0;
  double radius = 0.0;

  static RhoValue from_exact(const Rational& q);
  static RhoValue from_interval(double mid, double rad);

  bool is_exact() const { return exact.has_value(); }
  /// Certified sign: +1/-1 when the enclosure excludes zero, else 0.
  int certified_sign() const;
  bool certainly_nonzero() const { return certified_sign() != 0; }
  std::string to_string() const;
};

RhoValue operator+(const RhoValue& a, const RhoValue& b);
RhoValue operator-(const RhoValue& a);

class ThinArcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One arc of the upper half circle on which the signature is constant.
struct SignatureArc {
  double start;  // angle in [0, pi]
  double end;
  std::optional<Rational> start_turns;  // exact angle / pi, when known
  std::optional<Rational> end_turns;
  Rational sample_parameter;  // u of the evaluation point
  int signature;
};

struct SignatureProfile {
  std::vector<SignatureArc> arcs;  // sorted by start angle
  double jump_uncertainty = 0.0;   // max angle width of a jump enclosure
};

/// Locates the jumps of the signature function on the upper half circle and
/// evaluates it exactly once per arc. Throws ThinArcError when two jumps are
/// closer than 1e-9.
SignatureProfile signature_profile(const SeifertMatrix& s);

RhoValue rho_zero(const SeifertMatrix& s);

}  // namespace knotcert
