#include "doctest.h"
#include "support.hpp"

#include "knotcert/cyclotomic.hpp"
#include "knotcert/exact_linalg.hpp"
#include "knotcert/smith.hpp"

using namespace knotcert;
using namespace knotcert::testing;

namespace {

const Poly kPhi30{1, 1, 0, -1, -1, -1, 0, 1, 1};

Poly t_power_minus_one(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c.front() = -1;
  c.back() = 1;
  return Poly(std::move(c));
}

LaurentPoly random_laurent(std::mt19937_64& rng) {
  return LaurentPoly(random_poly(rng, 2, 3), uniform(rng, -1, 1));
}

}  // namespace

TEST_SUITE("exact_algebra") {

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("polynomial gcd") {
  CHECK(poly_gcd(Poly{-1, 0, 1}, Poly{-1, 1}) == Poly{-1, 1});
  CHECK(poly_gcd(kPhi30, Poly{1, -1, 1}) == Poly(1));
  CHECK(poly_gcd(Poly{2, 4}, Poly()) == Poly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST_CASE("extended gcd and division identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 5), b = random_poly(rng, 4);
    const auto d = divmod(a, b);
    CHECK(d.quotient * b + d.remainder == a);
    CHECK(d.remainder.degree() < b.degree());
    const auto e = extended_gcd(a, b);
    CHECK(e.s * a + e.u * b == e.gcd);
    CHECK(divides(e.gcd, a));
    CHECK(divides(e.gcd, b));
  }
}

TEST_CASE("laurent arithmetic and conjugation") {
  const LaurentPoly f(Poly{1, 2}, -1);  // t^-1 + 2
  CHECK(f.conjugate() == LaurentPoly(Poly{2, 1}));
  CHECK((f * f.conjugate()).conjugate() == f * f.conjugate());
  CHECK(equal_up_to_units(LaurentPoly(Poly{1, -1, 1}, 3), -LaurentPoly(Poly{1, -1, 1})));
  CHECK_FALSE(equal_up_to_units(LaurentPoly(Poly{1, 2}), LaurentPoly(Poly{2, 1})));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == Poly{-1, 1});
  CHECK(cyclotomic(6) == Poly{1, -1, 1});
  CHECK(cyclotomic(30) == kPhi30);
  // Phi_6 from t^6 - 1 over Phi_1 Phi_2 Phi_3.
  CHECK(exact_div(t_power_minus_one(6), Poly{-1, 1} * Poly{1, 1} * Poly{1, 1, 1}) == cyclotomic(6));
}

TEST_CASE("cyclotomic products give t^n - 1") {
  for (int n = 1; n <= 60; ++n) {
    CAPTURE(n);
    Poly product(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) product *= cyclotomic(d);
    CHECK(product == t_power_minus_one(n));
    CHECK(divides(cyclotomic(n), t_power_minus_one(n)));
  }
}

TEST_CASE("recognize_cyclotomic") {
  CHECK(recognize_cyclotomic(Poly{-1, 1}) == 1);
  CHECK(recognize_cyclotomic(kPhi30) == 30);
  CHECK(recognize_cyclotomic(Poly{1, 0, 1}) == 4);
  CHECK_FALSE(recognize_cyclotomic(Poly{1, -3, 1}).has_value());
  CHECK_FALSE(recognize_cyclotomic(kPhi30 * kPhi30).has_value());
  for (int n = 1; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(recognize_cyclotomic(cyclotomic(n)) == n);
  }
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(30) == 8);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(distinct_prime_factors(105) == std::vector<long long>{3, 5, 7});
  CHECK(is_prime_power(128));
  CHECK_FALSE(is_prime_power(12));
  CHECK(prime_powers_up_to(16) == std::vector<long long>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
}

TEST_CASE("resultant examples against the Sylvester determinant") {
  CHECK(resultant(Poly{-2, 1}, Poly{-3, 1}) == -1);
  CHECK(resultant(Poly{1, -1, 1}, Poly{-1, 0, 1}) == 3);
  CHECK(oracle_resultant(Poly{1, -1, 1}, Poly{-1, 0, 1}) == 3);
  CHECK(resultant(kPhi30, t_power_minus_one(4)) == 1);
  CHECK(oracle_resultant(kPhi30, t_power_minus_one(4)) == 1);
}

TEST_CASE("resultant agrees with the oracle and is multiplicative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly f = random_poly(rng, 5), g = random_poly(rng, 5), h = random_poly(rng, 5);
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
    CHECK(resultant(f, h) == oracle_resultant(f, h));
    CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
  }
}

TEST_CASE("determinants") {
  CHECK(det_laurent(identity_matrix<LaurentPoly>(3)) == LaurentPoly(1));
  PolyMatrix m(2, 2);
  m << LaurentPoly::t(), LaurentPoly(1), LaurentPoly(1), LaurentPoly::t();
  CHECK(det_laurent(m) == LaurentPoly(Poly{-1, 0, 1}));
}

TEST_CASE("det_laurent agrees with cofactor expansion") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      PolyMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_laurent(rng);
      CAPTURE(n);
      CHECK(det_laurent(m) == cofactor_determinant(m));
    }
}

TEST_CASE("bareiss and fraction-free solve over the integers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform(rng, 1, 6);
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = uniform(rng, -5, 5);
    const BigInt det = bareiss_determinant(a);
    CHECK(Rational(det) == gauss_det(to_rational_matrix(a)));
    if (det == 0) continue;
    IntMatrix b(n, 1);
    for (int i = 0; i < n; ++i) b(i, 0) = uniform(rng, -5, 5);
    const auto sol = fraction_free_solve(a, b);
    CHECK(sol.determinant == det);
    CHECK(multiply<BigInt>(a, sol.scaled) == b * det);
  }
}

TEST_CASE("smith form of an already diagonal chain is unchanged") {
  QtMatrix d = zero_matrix<Poly>(2, 2);
  d(0, 0) = Poly{-1, 1};
  d(1, 1) = Poly{-1, 0, 1};
  const auto snf = smith_form(d);
  CHECK(snf.diagonal == std::vector<Poly>{Poly{-1, 1}, Poly{-1, 0, 1}});
  CHECK(snf.left == identity_matrix<Poly>(2));
  CHECK(snf.right == identity_matrix<Poly>(2));
}

TEST_CASE("smith form recovers a scrambled diagonal") {
  std::mt19937_64 rng(19);
  PolyMatrix d = zero_matrix<LaurentPoly>(2, 2);
  d(0, 0) = LaurentPoly(Poly{-1, 1});
  d(1, 1) = LaurentPoly(Poly{-1, 0, 1});
  PolyMatrix u = identity_matrix<LaurentPoly>(2), v = identity_matrix<LaurentPoly>(2);
  for (int step = 0; step < 4; ++step) {
    const LaurentPoly c = random_laurent(rng);
    u.row(step % 2) += c * u.row(1 - step % 2);
    v.col(step % 2) += c * v.col(1 - step % 2);
  }
  const PolyMatrix scrambled = multiply(multiply(u, d), v);
  CHECK(smith_normal_form(scrambled).nontrivial_factors() == std::vector<Poly>{Poly{-1, 1}, Poly{-1, 0, 1}});
}

TEST_CASE("smith round trip on random integer-coefficient matrices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = uniform(rng, 1, 5), cols = uniform(rng, 1, 5);
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = LaurentPoly(random_poly(rng, 2, 3));
    const SNFResult snf = smith_normal_form(m);
    CAPTURE(trial);
    CHECK(multiply(multiply(snf.left_transform, m), snf.right_transform) == snf.diagonal_matrix(rows, cols));
    CHECK(multiply(snf.left_transform, snf.left_inverse) == identity_matrix<LaurentPoly>(rows));
    CHECK(multiply(snf.right_transform, snf.right_inverse) == identity_matrix<LaurentPoly>(cols));
    for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
      if (snf.diagonal[k + 1].is_zero()) continue;
      CHECK(divides(snf.diagonal[k], snf.diagonal[k + 1]));
    }
  }
}

}  // TEST_SUITE
