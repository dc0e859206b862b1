#pragma once

// Random inputs and independent oracles shared by the test binaries. The
// oracles deliberately avoid the library's own algorithms: determinants by
// plain Gaussian elimination over Q, polynomials by evaluation and Lagrange
// interpolation, signatures by floating-point eigenvalues.

#include "knotcert/cyclotomic.hpp"
#include "knotcert/exact_linalg.hpp"
#include "knotcert/seifert.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <ostream>
#include <random>

namespace knotcert {

// Lets doctest print failing comparisons of polynomial matrices.
inline std::ostream& operator<<(std::ostream& out, const Poly& p) { return out << to_string(p); }
inline std::ostream& operator<<(std::ostream& out, const LaurentPoly& p) { return out << to_string(p); }

}  // namespace knotcert

namespace knotcert::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Standard symplectic upper part plus a random symmetric matrix, then a
/// random unimodular congruence. V - V^T stays the standard form.
inline SeifertMatrix random_seifert(std::mt19937_64& rng, int genus, int spread = 2) {
  const Eigen::Index n = 2 * genus;
  IntMatrix v = zero_matrix<BigInt>(n, n);
  for (Eigen::Index k = 0; k < genus; ++k) v(2 * k, 2 * k + 1) = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      const BigInt x = uniform(rng, -spread, spread);
      v(i, j) += x;
      if (i != j) v(j, i) += x;
    }
  IntMatrix p = identity_matrix<BigInt>(n);
  for (int step = 0; step < 2 * n && n > 1; ++step) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<Eigen::Index>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    p.col(i) += BigInt(uniform(rng, -1, 1)) * p.col(j);
  }
  return SeifertMatrix::validate(multiply<BigInt>(multiply<BigInt>(p.transpose(), v), p), "random");
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, int spread = 4) {
  std::vector<Rational> c;
  const int d = uniform(rng, 0, max_degree);
  for (int k = 0; k <= d; ++k) c.emplace_back(uniform(rng, -spread, spread));
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c));
}

/// Determinant over Q by partial pivoting on nonzero entries.
inline Rational gauss_det(RationalMatrix a) {
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// Solves a x = b over Q (a nonsingular).
inline RationalVector gauss_solve(RationalMatrix a, RationalVector b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (a(p, k) == 0) ++p;
    a.row(p).swap(a.row(k));
    std::swap(b(p), b(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b(i) -= f * b(k);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) b(i) /= a(i, i);
  return b;
}

/// The polynomial of degree <= points.size() - 1 through (x_k, y_k).
inline Poly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Poly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      basis *= Poly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[k] - xs[j];
    }
    out += (ys[k] / denom) * basis;
  }
  return out;
}

inline RationalMatrix to_rational_matrix(const IntMatrix& m) {
  return map_entries<Rational>(m, [](const BigInt& z) { return Rational(z); });
}

/// det(a + t b) as a polynomial, by interpolation at n + 1 integer points.
inline Poly pencil_det(const IntMatrix& a, const IntMatrix& b) {
  const RationalMatrix qa = to_rational_matrix(a), qb = to_rational_matrix(b);
  std::vector<Rational> xs, ys;
  for (Eigen::Index k = 0; k <= a.rows(); ++k) {
    const Rational t(k + 2);
    xs.push_back(t);
    ys.push_back(gauss_det(qa + qb * t));
  }
  return lagrange(xs, ys);
}

/// det(V^T - tV) by interpolation, normalized to a primitive integer
/// polynomial with positive leading coefficient and nonzero constant term.
inline Poly oracle_alexander(const SeifertMatrix& s) {
  if (s.size() == 0) return Poly(1);
  Poly d = strip_t_power(pencil_det(s.entries().transpose(), -s.entries()));
  d = primitive_integer(d);
  if (d.leading() < 0) d = -d;
  return d;
}

/// Resultant as the determinant of the Sylvester matrix, by elimination.
inline Rational oracle_resultant(const Poly& f, const Poly& g) {
  return gauss_det(sylvester_matrix(f, g));
}

/// True when a/b - c/d lies in Q[t, t^-1].
inline bool same_mod_laurent(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  const Poly diff = a * d - c * b;
  if (diff.is_zero()) return true;
  const Poly den = b * d;
  const Poly reduced = exact_div(den, poly_gcd(diff, den));
  return strip_t_power(reduced).degree() == 0;
}

/// (1 - t) x^T (V - tV^T)^{-1} y as N/D with D = det(V - tV^T), by
/// interpolating D and D * value at enough points.
struct OracleFraction {
  Poly num;
  Poly den;
};

inline OracleFraction oracle_blanchfield(const SeifertMatrix& s, const RationalVector& x, const RationalVector& y) {
  const RationalMatrix v = to_rational_matrix(s.entries());
  const Eigen::Index n = v.rows();
  std::vector<Rational> xs, ds, ns;
  for (Eigen::Index k = 0; k <= n + 1; ++k) {
    const Rational t = Rational(k + 2) / Rational(k + 3) + Rational(k);
    const RationalMatrix m = v - v.transpose() * t;
    const Rational d = gauss_det(m);
    const RationalVector z = gauss_solve(m, y);
    Rational value(0);
    for (Eigen::Index i = 0; i < n; ++i) value += x(i) * z(i);
    xs.push_back(t);
    ds.push_back(d);
    ns.push_back((Rational(1) - t) * value * d);
  }
  return {lagrange(xs, ns), lagrange(xs, ds)};
}

/// Signature of (1 - w) V + (1 - conj w) V^T by eigenvalues.
inline int float_signature(const Eigen::MatrixXcd& v, double theta) {
  const std::complex<double> w = std::polar(1.0, theta);
  const Eigen::MatrixXcd h = (1.0 - w) * v + (1.0 - std::conj(w)) * v.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()(i);
    if (e > 1e-9) ++sig;
    if (e < -1e-9) --sig;
  }
  return sig;
}

/// Mean of the signature over the circle by the midpoint rule.
inline double sampled_rho(const SeifertMatrix& s, int samples) {
  Eigen::MatrixXcd v(s.size(), s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i)
    for (Eigen::Index j = 0; j < s.size(); ++j) v(i, j) = s(i, j).convert_to<double>();
  double total = 0;
  for (int k = 0; k < samples; ++k) total += float_signature(v, M_PI * (k + 0.5) / samples);
  return total / samples;
}

}  // namespace knotcert::testing
