#include "doctest.h"
#include "support.hpp"

#include "knotcert/branched_covers.hpp"

using namespace knotcert;
using namespace knotcert::testing;

namespace {

const Poly kPhi30{1, 1, 0, -1, -1, -1, 0, 1, 1};

Poly t_power_minus_one(long long k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.front() = -1;
  c.back() = 1;
  return Poly(std::move(c));
}

// |res(Delta, t^k - 1)| from the Sylvester determinant.
BigInt oracle_order(const SeifertMatrix& s, long long k) {
  const Rational r = oracle_resultant(oracle_alexander(s), t_power_minus_one(k));
  return numerator_of(abs(r));
}

}  // namespace

TEST_SUITE("branched_covers") {

TEST_CASE("cover orders of small knots") {
  CHECK(cover_homology_order(SeifertMatrix::unknot(), 5).order == 1);
  CHECK(cover_homology_order(trefoil(), 2).order == 3);
  CHECK(cover_homology_order(trefoil(), 3).order == 4);
  CHECK(cover_homology_order(trefoil(), 6).infinite());
  CHECK(oracle_order(trefoil(), 2) == 3);
  CHECK(oracle_order(trefoil(), 3) == 4);
  CHECK(oracle_order(trefoil(), 6) == 0);
  CHECK_THROWS_AS(cover_homology_order(trefoil(), 1), std::invalid_argument);
}

TEST_CASE("prime-power covers of C are homology spheres") {
  const SeifertMatrix c = build_seed_matrix(SeedMatrix::C);
  for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32}) {
    CAPTURE(q);
    CHECK(cover_homology_order(c, q).order == 1);
    CHECK(oracle_order(c, q) == 1);
  }
  for (long long q : {64, 81, 125, 128}) CHECK(cover_homology_order(c, q).order == 1);
}

TEST_CASE("cover orders agree with the resultant oracle on random matrices") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const SeifertMatrix s = random_seifert(rng, uniform(rng, 1, 3));
    for (long long k = 2; k <= 8; ++k) CHECK(cover_homology_order(s, k).order == oracle_order(s, k));
  }
}

TEST_CASE("order zero iff Delta shares a root with t^k - 1") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const SeifertMatrix s = random_seifert(rng, uniform(rng, 1, 3), 1);
    const Poly delta = alexander_polynomial(s).body();
    for (long long k = 2; k <= 12; ++k)
      CHECK(cover_homology_order(s, k).infinite() == (poly_gcd(delta, t_power_minus_one(k)).degree() > 0));
  }
  CHECK(cover_homology_order(granny(), 6).infinite());
}

TEST_CASE("livingston criterion") {
  const CriterionVerdict trivial = livingston_criterion(LaurentPoly(1));
  CHECK(trivial.passes);
  CHECK(trivial.stripped_factors.empty());

  const CriterionVerdict c = livingston_criterion(LaurentPoly(kPhi30 * kPhi30));
  CHECK(c.passes);
  REQUIRE(c.stripped_factors.size() == 1);
  CHECK(c.stripped_factors.front().n == 30);
  CHECK(c.stripped_factors.front().multiplicity == 2);

  const CriterionVerdict t = livingston_criterion(LaurentPoly(Poly{1, -1, 1}));
  CHECK_FALSE(t.passes);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->monic() == Poly{1, -1, 1});
  CHECK(cover_homology_order(trefoil(), 2).order != 1);

  CHECK_THROWS(livingston_criterion(LaurentPoly(Poly{1, 1})));
}

TEST_CASE("three-prime cyclotomics give homology-sphere prime-power covers") {
  for (long long n : {30, 42, 60, 66, 70, 105})
    for (long long q : prime_powers_up_to(32)) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(abs(resultant(cyclotomic(n), t_power_minus_one(q))) == 1);
    }
}

TEST_CASE("the two evidence paths agree") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const SeifertMatrix s = random_seifert(rng, uniform(rng, 1, 3));
    const LaurentPoly delta = alexander_polynomial(s);
    const bool passes = livingston_criterion(delta).passes;
    bool all_spheres = true;
    for (long long q : prime_powers_up_to(16)) all_spheres &= cover_homology_order(delta, q).order == 1;
    if (passes) CHECK(all_spheres);
    if (!all_spheres) CHECK_FALSE(passes);
  }
}

TEST_CASE("casson-gordon certificates") {
  const CassonGordonCertificate unknot = casson_gordon_vanishing_certificate(SeifertMatrix::unknot());
  CHECK(unknot.issued);

  const CassonGordonCertificate c = casson_gordon_vanishing_certificate(build_seed_matrix(SeedMatrix::C));
  CHECK(c.issued);
  CHECK(c.criterion.passes);
  CHECK(c.scan.size() == prime_powers_up_to(128).size());
  for (const auto& co : c.scan) CHECK(co.order == 1);

  const CassonGordonCertificate t = casson_gordon_vanishing_certificate(trefoil());
  CHECK_FALSE(t.issued);
  REQUIRE(t.failing_cover.has_value());
  CHECK(t.failing_cover->k == 2);
  CHECK(t.failing_cover->order == 3);
  CHECK_FALSE(t.refusal.empty());
}

TEST_CASE("cover orders multiply under connected sum") {
  CHECK(connected_sum_cover_property(trefoil(), SeifertMatrix::unknot(), 4));
  CHECK(cover_homology_order(granny(), 2).order == 9);
  CHECK(connected_sum_cover_property(trefoil(), trefoil(), 2));
  const SeifertMatrix c = build_seed_matrix(SeedMatrix::C);
  CHECK(connected_sum_cover_property(c, c, 5));
  CHECK(cover_homology_order(connected_sum(c, c), 5).order == 1);
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    const SeifertMatrix a = random_seifert(rng, uniform(rng, 1, 2)), b = random_seifert(rng, uniform(rng, 1, 2));
    for (long long k = 2; k <= 12; ++k) {
      CHECK(connected_sum_cover_property(a, b, k));
      CHECK(cover_homology_order(connected_sum(a, b), k).order ==
            cover_homology_order(a, k).order * cover_homology_order(b, k).order);
    }
  }
  CHECK_THROWS(connected_sum_cover_property(trefoil(), trefoil(), 1));
}

}  // TEST_SUITE
