// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion recomputes its values through the public
// API and, where one exists, an independent oracle from support.hpp.

#include "support.hpp"

#include "knotcert/branched_covers.hpp"
#include "knotcert/cyclotomic.hpp"
#include "knotcert/obstruction.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace knotcert;
using namespace knotcert::testing;

namespace {

const Poly kPhi30{1, 1, 0, -1, -1, -1, 0, 1, 1};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Poly t_power_minus_one(long long k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
  c.front() = -1;
  c.back() = 1;
  return Poly(std::move(c));
}

void alexander_of_a(Outcome& o) {
  const auto start = Clock::now();
  const LaurentPoly delta = alexander_polynomial(build_seed_matrix(SeedMatrix::A));
  const double elapsed = seconds_since(start);
  o.require(delta == LaurentPoly(kPhi30), "Delta(A) = Phi_30");
  o.require(delta.body() == oracle_alexander(build_seed_matrix(SeedMatrix::A)), "interpolation oracle");
  o.require(elapsed < 1.0, "runtime < 1 s");
  o.detail << "Delta(A) = " << to_string(delta) << ", " << elapsed << " s";
}

void snf_of_c(Outcome& o) {
  const auto start = Clock::now();
  const SNFResult snf = smith_normal_form(alexander_presentation(build_seed_matrix(SeedMatrix::C).entries()));
  const double elapsed = seconds_since(start);
  const auto factors = snf.nontrivial_factors();
  o.require(factors == std::vector<Poly>{kPhi30 * kPhi30}, "single invariant factor Phi_30^2");
  int units = 0;
  for (const auto& d : snf.diagonal) units += d.degree() == 0 ? 1 : 0;
  o.require(units == 15, "fifteen unit factors");
  o.require(elapsed < 30.0, "runtime < 30 s");
  o.detail << factors.size() << " nontrivial factor(s), " << units << " units, " << elapsed << " s";
}

void module_of_b(Outcome& o) {
  const AlexModule m = module_from_seifert(build_seed_matrix(SeedMatrix::B));
  o.require(m.invariant_factors() == std::vector<Poly>{kPhi30, kPhi30}, "factors (Phi_30, Phi_30)");
  o.detail << "invariant factors: " << m.invariant_factors().size() << " x Phi_30";
}

void covers_of_c(Outcome& o) {
  const auto start = Clock::now();
  const SeifertMatrix c = build_seed_matrix(SeedMatrix::C);
  const LaurentPoly delta = alexander_polynomial(c);
  int checked = 0;
  for (long long q : prime_powers_up_to(128)) {
    const CoverOrder co = cover_homology_order(c, q);
    o.require(co.order == 1, "order 1 at q = " + std::to_string(q));
    if (q <= 32) o.require(oracle_resultant(oracle_alexander(c), t_power_minus_one(q)) == 1,
                           "Sylvester oracle at q = " + std::to_string(q));
    ++checked;
  }
  const CriterionVerdict v = livingston_criterion(delta);
  o.require(v.passes, "criterion passes for Phi_30^2");
  const CassonGordonCertificate cert = casson_gordon_vanishing_certificate(c, 128);
  o.require(cert.issued && cert.criterion.passes, "both evidence paths agree");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "full scan < 60 s");
  o.detail << checked << " prime powers, criterion " << (v.passes ? "passes" : "fails") << ", " << elapsed << " s";
}

void negative_controls(Outcome& o) {
  const SeifertMatrix t = trefoil();
  o.require(cover_homology_order(t, 2).order == 3, "2-fold order 3");
  o.require(cover_homology_order(t, 3).order == 4, "3-fold order 4");
  o.require(cover_homology_order(t, 6).infinite(), "6-fold infinite");
  const Poly phi6{1, -1, 1};
  o.require(oracle_resultant(phi6, t_power_minus_one(2)) == 3, "oracle 2-fold");
  o.require(oracle_resultant(phi6, t_power_minus_one(3)) == 4, "oracle 3-fold");
  o.require(oracle_resultant(phi6, t_power_minus_one(6)) == 0, "oracle 6-fold");
  o.require(!livingston_criterion(LaurentPoly(phi6)).passes, "criterion fails for Phi_6");
  o.detail << "orders 3, 4, infinite; criterion fails for Phi_6";
}

void rho_values(Outcome& o) {
  const RhoValue t = rho_zero(trefoil()), g = rho_zero(granny());
  o.require(t.exact == Rational(-4, 3), "rho(trefoil) = -4/3");
  o.require(g.exact == Rational(-8, 3), "rho(granny) = -8/3");
  constexpr int kSamples = 1'000'000;
  const double st = sampled_rho(trefoil(), kSamples), sg = sampled_rho(granny(), kSamples);
  o.require(std::abs(st + 4.0 / 3) < 1e-4, "trefoil sampling agrees");
  o.require(std::abs(sg + 8.0 / 3) < 1e-4, "granny sampling agrees");
  o.detail << "exact " << t.to_string() << ", " << g.to_string() << "; sampled " << st << ", " << sg;
}

void blanchfield_suite(Outcome& o) {
  const AlexModule m = module_from_seifert(build_seed_matrix(SeedMatrix::C));
  std::mt19937_64 rng(20240601);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Poly> rx, ry;
    for (const auto& d : m.invariant_factors()) {
      rx.push_back(random_poly(rng, d.degree() - 1, 3) % d);
      ry.push_back(random_poly(rng, d.degree() - 1, 3) % d);
    }
    const ModuleElement x = m.from_normal_coordinates(rx), y = m.from_normal_coordinates(ry);
    if (m.blanchfield(x, y) != m.blanchfield(y, x).conjugate()) ++failures;
  }
  o.require(failures == 0, "Hermitian on 100 random pairs");
  const NonsingularityWitness w = nonsingularity(m);
  o.require(w.nonsingular(), "pairing matrix has full rank");
  const auto basis = m.rational_basis();
  bool partners = w.partners.size() == basis.size();
  for (std::size_t i = 0; partners && i < basis.size(); ++i)
    partners = w.partners[i] >= 0 &&
               !m.blanchfield(basis[i], basis[static_cast<std::size_t>(w.partners[i])]).is_zero();
  o.require(partners, "every basis element has a partner");
  const auto subs = proper_submodules(m);
  o.require(subs.size() == 1, "unique proper submodule");
  if (subs.size() == 1) {
    const OrthogonalComplement oc = orthogonal_complement(m, subs.front());
    o.require(oc.is_self_annihilating && same_submodule(m, oc.complement, subs.front()), "P0 = P0 perp");
    o.require(subs.front().order == kPhi30, "P0 has order Phi_30");
  }
  o.detail << "100 pairs, rank " << w.rank << "/" << w.dimension << ", " << subs.size() << " proper submodule";
}

void character_pair(Outcome& o) {
  const AlexModule m = module_from_seifert(build_seed_matrix(SeedMatrix::C));
  const ModuleElement g = m.generator();
  const ModuleElement p0 = m.scale(LaurentPoly(kPhi30), g);
  const CharacterValue eta_p0 = character_value(m, g, p0), p0_p0 = character_value(m, p0, p0);
  o.require(eta_p0.is_nontrivial && !eta_p0.value.is_zero(), "Bl(g, Phi_30 g) != 0");
  o.require(!p0_p0.is_nontrivial && p0_p0.value.is_zero(), "Bl(Phi_30 g, Phi_30 g) = 0");
  o.detail << "Bl(g, Phi_30 g) has denominator " << to_string(eta_p0.value.denominator());
}

void certificates(Outcome& o) {
  const SeifertMatrix c = build_seed_matrix(SeedMatrix::C);
  const ModuleElement g = module_from_seifert(c).generator();
  const GraftedKnot k = graft(c, CompanionKnot::from_seifert(granny()), g);
  o.require(solvable_one_certificate(k).kind == CertificateKind::OneSolvable, "OneSolvable");
  o.require(not_one_point_five_certificate(k).kind == CertificateKind::NotOnePointFiveSolvable,
            "NotOnePointFiveSolvable");

  const GraftedKnot t = graft(c, CompanionKnot::from_seifert(trefoil()), g);
  const SolvabilityCertificate ts = solvable_one_certificate(t);
  o.require(ts.kind == CertificateKind::Inconclusive && ts.failed_check == "companion_arf", "trefoil: Arf gate");

  const SeifertMatrix a = build_seed_matrix(SeedMatrix::A);
  bool hypothesis = false;
  try {
    not_one_point_five_certificate(graft(a, CompanionKnot::from_seifert(granny()), module_from_seifert(a).generator()));
  } catch (const HypothesisFailure&) {
    hypothesis = true;
  }
  o.require(hypothesis, "base A: hypothesis failure");

  const SolvabilityCertificate combo = combination_obstruction({{k, 1}, {k, 1}, {k, 1}});
  o.require(combo.kind == CertificateKind::NotOnePointFiveSolvable && combo.witnesses.at("method") == "same_sign",
            "combination via same-sign shortcut");
  for (const Json& j : {to_json(solvable_one_certificate(k)), to_json(not_one_point_five_certificate(k)), to_json(combo)})
    o.require(replay_certificate(j) == j, "replay of " + j.at("certificate_type").get<std::string>());
  o.detail << "OneSolvable, NotOnePointFiveSolvable, Arf gate, hypothesis failure, same-sign combination";
}

void property_suites(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937_64 rng(4242);

  int snf_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = uniform(rng, 1, 5), cols = uniform(rng, 1, 5);
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = LaurentPoly(random_poly(rng, 2, 3));
    const SNFResult snf = smith_normal_form(m);
    bool ok = multiply(multiply(snf.left_transform, m), snf.right_transform) == snf.diagonal_matrix(rows, cols);
    for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k)
      if (!snf.diagonal[k + 1].is_zero()) ok = ok && divides(snf.diagonal[k], snf.diagonal[k + 1]);
    snf_bad += ok ? 0 : 1;
  }
  o.require(snf_bad == 0, "SNF round trip");

  int res_bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = random_poly(rng, 5), g = random_poly(rng, 5), h = random_poly(rng, 5);
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
    res_bad += resultant(f * g, h) == resultant(f, h) * resultant(g, h) ? 0 : 1;
  }
  o.require(res_bad == 0, "resultant multiplicativity");

  int cover_bad = 0, sigma_bad = 0, arf_bad = 0, palin_bad = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const SeifertMatrix a = random_seifert(rng, uniform(rng, 1, 2)), b = random_seifert(rng, uniform(rng, 1, 2));
    for (long long k = 2; k <= 12; ++k) cover_bad += connected_sum_cover_property(a, b, k) ? 0 : 1;
    const CirclePoint w = CirclePoint::from_parameter(Rational(uniform(rng, 1, 40), uniform(rng, 1, 40)));
    sigma_bad += levine_tristram(reverse_mirror(a), w) == -levine_tristram(a, w) ? 0 : 1;
    arf_bad += arf_invariant(connected_sum(a, b)) == (arf_invariant(a) ^ arf_invariant(b)) ? 0 : 1;
    const LaurentPoly delta = alexander_polynomial(connected_sum(a, b));
    palin_bad += equal_up_to_units(delta, delta.conjugate()) ? 0 : 1;
  }
  o.require(cover_bad == 0, "cover-order multiplicativity");
  o.require(sigma_bad == 0, "signature antisymmetry");
  o.require(arf_bad == 0, "Arf additivity");
  o.require(palin_bad == 0, "palindromicity");

  o.require(arf_invariant(build_seed_matrix(SeedMatrix::C)) == 0, "Arf(C) = 0");
  o.require(kPhi30(Rational(-1)) == 1, "Phi_30(-1) = 1");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 300.0, "suite < 5 min");
  o.detail << "100 SNF, 50 resultant, 30 knot pairs; " << elapsed << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Alexander polynomial of A is Phi_30", alexander_of_a},
      {"SNF of C has the single factor Phi_30^2", snf_of_c},
      {"module of B is Phi_30 + Phi_30", module_of_b},
      {"prime-power covers of C are homology spheres", covers_of_c},
      {"trefoil negative controls", negative_controls},
      {"rho_0 of trefoil and granny", rho_values},
      {"Blanchfield suite on C", blanchfield_suite},
      {"character witness pair on C", character_pair},
      {"solvability certificates", certificates},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first << " -- " << o.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
