#include "knotcert/report.hpp"

#include "knotcert/matrix_io.hpp"
#include "knotcert/obstruction.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <random>
#include <sstream>

namespace knotcert {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string tool_version() { return KNOTCERT_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Json to_json(const CheckRecord& c) {
  return Json{{"name", c.name},
              {"verdict", c.verdict},
              {"ok", c.ok},
              {"witnesses", c.witnesses},
              {"reference", c.reference},
              {"wall_time_ms", c.wall_time_ms}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"schema", kReportSchema},
              {"tool_version", tool_version()},
              {"input_digest", r.input_digest},
              {"command", r.command},
              {"checks", checks},
              {"passed", r.passed()}};
}

CheckRecord run_check(const std::string& name, const std::string& reference,
                      const std::function<void(CheckRecord&)>& body) {
  CheckRecord c;
  c.name = name;
  c.reference = reference;
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& verdict, const std::exception& e) {
    c.verdict = verdict;
    c.ok = false;
    c.witnesses["error"] = e.what();
  };
  try {
    body(c);
  } catch (const HypothesisFailure& e) {
    fail("hypothesis_failure", e);
  } catch (const UnsupportedModule& e) {
    fail("unsupported_module", e);
  } catch (const std::exception& e) {
    fail("error", e);
  }
  c.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<CheckRecord> replay_report(const Json& report) {
  std::vector<CheckRecord> out;
  for (const auto& check : report.at("checks")) {
    const Json& w = check.value("witnesses", Json::object());
    if (!w.contains("certificates")) continue;
    std::size_t index = 0;
    for (const auto& cert : w.at("certificates")) {
      const std::string name = check.at("name").get<std::string>() + "[" + std::to_string(index++) + "]";
      out.push_back(run_check(name, "replayed certificate matches the recorded one", [&](CheckRecord& c) {
        const Json again = replay_certificate(cert);
        c.ok = again == cert;
        c.verdict = c.ok ? "match" : "mismatch";
        c.witnesses["certificate_type"] = cert.at("certificate_type");
        c.witnesses["recorded_verdict"] = cert.at("verdict");
        c.witnesses["replayed_verdict"] = again.at("verdict");
      }));
    }
  }
  return out;
}

std::vector<IntVector> diagonal_metabolizer_basis() {
  std::vector<IntVector> basis;
  for (Eigen::Index i = 0; i < 8; ++i) {
    IntVector v = IntVector::Constant(16, BigInt(0));
    v(i) = 1;
    v(8 + (7 - i)) = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void set_result(CheckRecord& c, bool ok) {
  c.ok = ok;
  c.verdict = ok ? "pass" : "fail";
}

Json factor_list(const std::vector<Poly>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(to_string(f));
  return out;
}

ModuleElement random_element(const AlexModule& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Poly> residues;
  for (const auto& d : m.invariant_factors()) {
    std::vector<Rational> c;
    for (int j = 0; j < d.degree(); ++j) c.emplace_back(coeff(rng));
    residues.emplace_back(std::move(c));
  }
  return m.from_normal_coordinates(residues);
}

}  // namespace

Report paper_verify(const PaperVerifyOptions& options) {
  const SeifertMatrix a = build_seed_matrix(SeedMatrix::A);
  const SeifertMatrix b = build_seed_matrix(SeedMatrix::B);
  const SeifertMatrix base = options.base.value_or(build_seed_matrix(SeedMatrix::C));
  const SeifertMatrix companion_matrix = options.companion.value_or(granny());
  const Poly phi30 = cyclotomic(30);

  Report report;
  report.command = "paper-verify";
  std::string digest_input = format_matrix_file(base.entries()) + format_matrix_file(companion_matrix.entries());
  if (options.companion_rho) digest_input += "rho " + to_string(*options.companion_rho) + "\n";
  report.input_digest = sha256_hex(digest_input);

  report.checks.push_back(run_check("alexander_A", "det(A^T - tA) equals Phi_30(t)", [&](CheckRecord& c) {
    const LaurentPoly delta = alexander_polynomial(a);
    c.witnesses["alexander"] = to_string(delta);
    c.witnesses["phi_30"] = to_string(phi30);
    set_result(c, delta == LaurentPoly(phi30));
  }));

  report.checks.push_back(
      run_check("module_B", "the rational Alexander module of B is Q[t,t^-1]/Phi_30 + Q[t,t^-1]/Phi_30",
                [&](CheckRecord& c) {
                  const AlexModule m = module_from_seifert(b);
                  c.witnesses["invariant_factors"] = factor_list(m.invariant_factors());
                  set_result(c, m.invariant_factors() == std::vector<Poly>{phi30, phi30});
                }));

  report.checks.push_back(
      run_check("module_base_cyclic", "the rational Alexander module of the base is cyclic of order Phi_30^2",
                [&](CheckRecord& c) {
                  const AlexModule m = module_from_seifert(base);
                  c.witnesses["invariant_factors"] = factor_list(m.invariant_factors());
                  c.witnesses["dimension"] = m.dimension();
                  set_result(c, m.is_cyclic() && m.invariant_factors().front() == phi30 * phi30);
                }));

  report.checks.push_back(run_check(
      "metabolizer_B", "the vectors (e_i, J e_i) span a metabolizer of B", [&](CheckRecord& c) {
        const auto basis = diagonal_metabolizer_basis();
        Json vectors = Json::array();
        for (const auto& v : basis) {
          Json row = Json::array();
          for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(to_json(v(i)));
          vectors.push_back(row);
        }
        c.witnesses["basis"] = vectors;
        set_result(c, is_metabolizer(b, basis));
      }));

  report.checks.push_back(
      run_check("fox_milnor", "the base Alexander polynomial factors as f(t) f(1/t)", [&](CheckRecord& c) {
        const LaurentPoly delta = alexander_polynomial(base);
        c.witnesses["alexander"] = to_string(delta);
        set_result(c, fox_milnor_check(delta));
      }));

  report.checks.push_back(run_check(
      "casson_gordon", "every prime-power branched cyclic cover of the base is a homology sphere, so "
                       "Casson-Gordon invariants vanish",
      [&](CheckRecord& c) {
        const auto cert = casson_gordon_vanishing_certificate(base, kDefaultPrimePowerBound);
        c.witnesses["certificates"] = Json::array({to_json(cert, base)});
        c.ok = cert.issued;
        c.verdict = cert.issued ? "Issued" : "Refused";
      }));

  report.checks.push_back(run_check(
      "blanchfield", "the Blanchfield form of the base module is Hermitian and nonsingular", [&](CheckRecord& c) {
        const AlexModule m = module_from_seifert(base);
        std::mt19937_64 rng(20240601);
        int hermitian_failures = 0;
        constexpr int kPairs = 100;
        for (int i = 0; i < kPairs; ++i) {
          const ModuleElement x = random_element(m, rng);
          const ModuleElement y = random_element(m, rng);
          if (m.blanchfield(x, y) != m.blanchfield(y, x).conjugate()) ++hermitian_failures;
        }
        const NonsingularityWitness w = nonsingularity(m);
        const bool partners = std::all_of(w.partners.begin(), w.partners.end(), [](int p) { return p >= 0; });
        c.witnesses["hermitian_pairs"] = kPairs;
        c.witnesses["hermitian_failures"] = hermitian_failures;
        c.witnesses["dimension"] = w.dimension;
        c.witnesses["pairing_rank"] = w.rank;
        c.witnesses["partners"] = w.partners;
        set_result(c, hermitian_failures == 0 && w.nonsingular() && partners && !m.is_trivial());
      }));

  report.checks.push_back(run_check(
      "unique_submodule", "the base module has a unique proper submodule P0 = (Phi_30 g), and P0 is "
                          "self-annihilating",
      [&](CheckRecord& c) {
        const AlexModule m = module_from_seifert(base);
        const auto subs = proper_submodules(m);
        c.witnesses["proper_submodules"] = subs.size();
        if (subs.size() != 1) {
          set_result(c, false);
          return;
        }
        const ModuleElement g = m.generator();
        const ModuleElement p0 = subs.front().generators.front();
        const OrthogonalComplement oc = orthogonal_complement(m, subs.front());
        const CharacterValue eta_p0 = character_value(m, g, p0);
        const CharacterValue p0_p0 = character_value(m, p0, p0);
        c.witnesses["p0_order"] = to_string(subs.front().order);
        c.witnesses["self_annihilating"] = oc.is_self_annihilating;
        c.witnesses["character_g_p0"] = to_string(eta_p0.value);
        c.witnesses["character_p0_p0"] = to_string(p0_p0.value);
        set_result(c, oc.is_self_annihilating && eta_p0.is_nontrivial && !p0_p0.is_nontrivial);
      }));

  CompanionKnot companion = options.companion_rho
                                ? CompanionKnot::with_declared_rho(companion_matrix, RhoValue::from_exact(*options.companion_rho))
                                : CompanionKnot::from_seifert(companion_matrix);
  auto grafted = [&]() {
    const AlexModule m = module_from_seifert(base);
    return graft(base, companion, m.generator());
  };

  report.checks.push_back(run_check(
      "solvability_certificates", "the grafted knot K(J, eta) is (1)-solvable but not (1.5)-solvable",
      [&](CheckRecord& c) {
        const GraftedKnot g = grafted();
        const SolvabilityCertificate one = solvable_one_certificate(g);
        c.witnesses["certificates"] = Json::array({to_json(one)});
        const SolvabilityCertificate not_one_five = not_one_point_five_certificate(g);
        c.witnesses["certificates"].push_back(to_json(not_one_five));
        c.ok = one.kind == CertificateKind::OneSolvable &&
               not_one_five.kind == CertificateKind::NotOnePointFiveSolvable;
        c.verdict = c.ok ? "pass" : "fail";
        if (!one.failed_check.empty()) c.witnesses["failed_check"] = one.failed_check;
        else if (!not_one_five.failed_check.empty()) c.witnesses["failed_check"] = not_one_five.failed_check;
      }));

  report.checks.push_back(run_check(
      "combination", "no combination of three grafted knots with nonnegative coefficients is (1.5)-solvable",
      [&](CheckRecord& c) {
        const GraftedKnot g = grafted();
        const SolvabilityCertificate cert = combination_obstruction({{g, 1}, {g, 1}, {g, 1}});
        c.witnesses["certificates"] = Json::array({to_json(cert)});
        c.ok = cert.kind == CertificateKind::NotOnePointFiveSolvable;
        c.verdict = to_string(cert.kind);
      }));

  return report;
}

}  // namespace knotcert
