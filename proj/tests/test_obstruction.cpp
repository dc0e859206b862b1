#include "doctest.h"
#include "support.hpp"

#include "knotcert/obstruction.hpp"

using namespace knotcert;
using namespace knotcert::testing;

namespace {

const Poly kPhi30{1, 1, 0, -1, -1, -1, 0, 1, 1};

const SeifertMatrix& matrix_c() {
  static const SeifertMatrix c = build_seed_matrix(SeedMatrix::C);
  return c;
}

GraftedKnot graft_on_generator(const SeifertMatrix& base, const CompanionKnot& j) {
  return graft(base, j, module_from_seifert(base).generator());
}

CompanionKnot declared(const SeifertMatrix& s, RhoValue rho) { return CompanionKnot::with_declared_rho(s, rho); }

}  // namespace

TEST_SUITE("obstruction_pipeline") {

TEST_CASE("companions") {
  const CompanionKnot g = CompanionKnot::from_seifert(granny());
  CHECK(g.arf == 0);
  CHECK(g.rho.exact == Rational(-8, 3));
  CHECK_FALSE(g.rho_declared);
  const CompanionKnot t = CompanionKnot::from_seifert(trefoil());
  CHECK(t.arf == 1);
  const CompanionKnot d = declared(granny(), RhoValue::from_exact(Rational(5)));
  CHECK(d.rho_declared);
  CHECK(d.rho.exact == Rational(5));
  CHECK(companion_from_json(to_json(d)).rho.exact == Rational(5));
}

TEST_CASE("grafting keeps every abelian invariant of the base") {
  const GraftedKnot g = graft_on_generator(matrix_c(), CompanionKnot::from_seifert(granny()));
  CHECK(g.seifert() == matrix_c());
  CHECK(alexander_polynomial(g.seifert()) == LaurentPoly(kPhi30 * kPhi30));
  CHECK(arf_invariant(g.seifert()) == arf_invariant(matrix_c()));
  const CirclePoint w = CirclePoint::from_parameter(Rational(3, 7));
  CHECK(levine_tristram(g.seifert(), w) == levine_tristram(matrix_c(), w));
  for (long long k : {2, 3, 5, 6}) CHECK(cover_homology_order(g.seifert(), k).order == cover_homology_order(matrix_c(), k).order);
  CHECK(casson_gordon_vanishing_certificate(g.seifert()).issued);
}

TEST_CASE("graft reduces eta and rejects foreign elements") {
  const AlexModule m = module_from_seifert(matrix_c());
  const ModuleElement big = m.scale(LaurentPoly(kPhi30 * kPhi30 + Poly{0, 1}), m.generator());
  const GraftedKnot g = graft(matrix_c(), CompanionKnot::from_seifert(granny()), big);
  CHECK(g.eta == m.scale(LaurentPoly::t(), m.generator()));
  ModuleElement wrong{PolyVector(3)};
  CHECK_THROWS_AS(graft(matrix_c(), CompanionKnot::from_seifert(granny()), wrong), std::invalid_argument);
}

TEST_CASE("one-solvable certificate") {
  const CompanionKnot granny_j = CompanionKnot::from_seifert(granny());
  const SolvabilityCertificate ok = solvable_one_certificate(graft_on_generator(matrix_c(), granny_j));
  CHECK(ok.kind == CertificateKind::OneSolvable);
  CHECK(ok.failed_check.empty());
  CHECK(ok.witnesses.at("companion_alexander_at_minus_one") == "9");

  const SolvabilityCertificate t =
      solvable_one_certificate(graft_on_generator(matrix_c(), CompanionKnot::from_seifert(trefoil())));
  CHECK(t.kind == CertificateKind::Inconclusive);
  CHECK(t.failed_check == "companion_arf");

  const SeifertMatrix u = SeifertMatrix::unknot();
  const SolvabilityCertificate trivial =
      solvable_one_certificate(graft(u, granny_j, module_from_seifert(u).zero()));
  CHECK(trivial.kind == CertificateKind::OneSolvable);

  const SolvabilityCertificate a =
      solvable_one_certificate(graft_on_generator(build_seed_matrix(SeedMatrix::A), granny_j));
  CHECK(a.failed_check == "base_fox_milnor");
}

TEST_CASE("not-(1.5) certificate") {
  const CompanionKnot granny_j = CompanionKnot::from_seifert(granny());
  const SolvabilityCertificate ok = not_one_point_five_certificate(graft_on_generator(matrix_c(), granny_j));
  CHECK(ok.kind == CertificateKind::NotOnePointFiveSolvable);
  CHECK(ok.witnesses.at("companion_rho").at("exact") == "-8/3");
  CHECK(ok.witnesses.at("p0_self_annihilating") == true);

  const AlexModule m = module_from_seifert(matrix_c());
  const ModuleElement p0 = m.scale(LaurentPoly(kPhi30), m.generator());
  const SolvabilityCertificate in_p0 = not_one_point_five_certificate(graft(matrix_c(), granny_j, p0));
  CHECK(in_p0.kind == CertificateKind::Inconclusive);
  CHECK(in_p0.failed_check == "character");

  CHECK_THROWS_AS(not_one_point_five_certificate(graft_on_generator(build_seed_matrix(SeedMatrix::A), granny_j)),
                  HypothesisFailure);
  const SeifertMatrix b = build_seed_matrix(SeedMatrix::B);
  CHECK_THROWS_AS(not_one_point_five_certificate(graft(b, granny_j, module_from_seifert(b).zero())),
                  UnsupportedModule);

  const SolvabilityCertificate t =
      not_one_point_five_certificate(graft_on_generator(matrix_c(), CompanionKnot::from_seifert(trefoil())));
  CHECK(t.failed_check == "companion_arf");
}

TEST_CASE("not-(1.5) certificate is monotone in rho evidence") {
  for (double radius : {0.0, 0.5, 1.0, 2.0, 3.0, 10.0}) {
    const CompanionKnot j = declared(granny(), RhoValue::from_interval(-8.0 / 3, radius));
    const SolvabilityCertificate c = not_one_point_five_certificate(graft_on_generator(matrix_c(), j));
    CAPTURE(radius);
    if (radius < 8.0 / 3) {
      CHECK(c.kind == CertificateKind::NotOnePointFiveSolvable);
    } else {
      CHECK(c.kind == CertificateKind::Inconclusive);
      CHECK(c.failed_check == "companion_rho");
    }
  }
  const CompanionKnot zero = declared(granny(), RhoValue::from_exact(Rational(0)));
  CHECK(not_one_point_five_certificate(graft_on_generator(matrix_c(), zero)).failed_check == "companion_rho");
}

TEST_CASE("combination obstruction") {
  const GraftedKnot g = graft_on_generator(matrix_c(), CompanionKnot::from_seifert(granny()));
  const SolvabilityCertificate same = combination_obstruction({{g, 1}, {g, 1}, {g, 1}});
  CHECK(same.kind == CertificateKind::NotOnePointFiveSolvable);
  CHECK(same.witnesses.at("method") == "same_sign");

  const GraftedKnot plus = graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(1))));
  const GraftedKnot minus = graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(-1))));
  const SolvabilityCertificate killed = combination_obstruction({{plus, 1}, {minus, 1}}, 5);
  CHECK(killed.kind == CertificateKind::Inconclusive);
  CHECK(killed.failed_check == "vanishing_combination");
  CHECK(killed.witnesses.at("vanishing_coefficients") == Json::array({0, 1}));

  const GraftedKnot t = graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(-4, 3))));
  const SolvabilityCertificate negatives = combination_obstruction({{t, 1}, {g, 1}, {t, 1}});
  CHECK(negatives.kind == CertificateKind::NotOnePointFiveSolvable);

  // 3 - 5 c_1 ... with mixed signs and no small solution
  const GraftedKnot three = graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(3))));
  const GraftedKnot five = graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(5))));
  const SolvabilityCertificate mixed = combination_obstruction({{three, 1}, {five, -1}}, 1);
  CHECK(mixed.kind == CertificateKind::NotOnePointFiveSolvable);
  CHECK(mixed.witnesses.at("method") == "exhaustive_search");
  CHECK(combination_obstruction({{three, 1}, {five, -1}}, 10).kind == CertificateKind::Inconclusive);

  CHECK_THROWS(combination_obstruction({}));
}

TEST_CASE("combination search matches brute force") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform(rng, 2, 3);
    const long long bound = uniform(rng, 1, 4);
    std::vector<int> values;
    std::vector<CombinationTerm> terms;
    for (int i = 0; i < n; ++i) {
      int v = uniform(rng, -6, 6);
      if (i == 0 && v == 0) v = 1;
      values.push_back(v);
      terms.push_back({graft_on_generator(matrix_c(), declared(granny(), RhoValue::from_exact(Rational(v)))), 1});
    }
    bool vanishes = false;
    std::vector<long long> c(static_cast<std::size_t>(n), 0);
    for (;;) {
      long long sum = values[0];
      for (int i = 0; i < n; ++i) sum += c[static_cast<std::size_t>(i)] * values[static_cast<std::size_t>(i)];
      if (sum == 0) vanishes = true;
      int k = 0;
      while (k < n && c[static_cast<std::size_t>(k)] == bound) c[static_cast<std::size_t>(k++)] = 0;
      if (k == n) break;
      ++c[static_cast<std::size_t>(k)];
    }
    const SolvabilityCertificate cert = combination_obstruction(terms, bound);
    CAPTURE(trial);
    CHECK((cert.kind == CertificateKind::Inconclusive) == vanishes);
  }
}

TEST_CASE("certificate replay reproduces the json") {
  const GraftedKnot g = graft_on_generator(matrix_c(), CompanionKnot::from_seifert(granny()));
  const GraftedKnot d = graft_on_generator(matrix_c(), declared(trefoil(), RhoValue::from_interval(1.0, 0.25)));
  std::vector<Json> certs = {to_json(solvable_one_certificate(g)), to_json(not_one_point_five_certificate(g)),
                             to_json(not_one_point_five_certificate(d)),
                             to_json(combination_obstruction({{g, 1}, {g, 2}})),
                             to_json(casson_gordon_vanishing_certificate(matrix_c()), matrix_c()),
                             to_json(casson_gordon_vanishing_certificate(trefoil()), trefoil())};
  for (const auto& c : certs) {
    CAPTURE(c.at("certificate_type").get<std::string>());
    CHECK(replay_certificate(c) == c);
    CHECK(replay_certificate(Json::parse(c.dump())) == c);
  }
  Json tampered = certs[0];
  tampered["verdict"] = "Inconclusive";
  CHECK(replay_certificate(tampered) != tampered);
}

}  // TEST_SUITE
