// knotcert: command-line front end. Every subcommand reads a matrix file,
// delegates to one library operation and prints text or a JSON report.
//
// Exit codes: 0 success, 1 mathematical refusal, 2 input error.

#include "knotcert/branched_covers.hpp"
#include "knotcert/matrix_io.hpp"
#include "knotcert/obstruction.hpp"
#include "knotcert/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace {

using namespace knotcert;

constexpr int kExitRefusal = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Session {
  std::string command;
  bool json = false;
  std::string digest_bytes;
  std::ostringstream text;
  Report report;

  SeifertMatrix load(const std::string& path) {
    std::string bytes;
    try {
      bytes = read_text_file(path);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    digest_bytes += bytes;
    digest_bytes.push_back('\0');
    try {
      return parse_matrix_file(bytes, std::filesystem::path(path).stem().string());
    } catch (const std::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  void note_argument(const std::string& name, const std::string& value) {
    digest_bytes += name + "=" + value;
    digest_bytes.push_back('\0');
  }

  int finish() {
    report.command = command;
    report.input_digest = sha256_hex(digest_bytes);
    if (json) {
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return report.passed() ? 0 : kExitRefusal;
  }
};

Rational parse_rational_arg(const std::string& s, const std::string& flag) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw InputError(flag + ": not a rational number: " + s);
  }
}

// "1,0,-2/3" -> 1 - 2/3 t^2
Poly parse_coefficients(const std::string& s, const std::string& flag) {
  std::vector<Rational> coeffs;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) coeffs.push_back(parse_rational_arg(item, flag));
  if (coeffs.empty()) throw InputError(flag + ": empty coefficient list");
  return Poly(std::move(coeffs));
}

std::string subscript(long long n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

// Phi_n or a power of it when Delta is one, else Delta.
std::string alexander_name(const Poly& delta) {
  if (delta.degree() > 0) {
    const auto parts = squarefree_decomposition(delta);
    if (parts.size() == 1)
      if (auto n = recognize_cyclotomic(parts.front().first.monic())) {
        std::string name = "Φ" + subscript(*n) + "(t)";
        if (parts.front().second > 1) name += "^" + std::to_string(parts.front().second);
        return name;
      }
  }
  return "Δ(t)";
}

CheckRecord single_check(Session& s, const std::string& reference, const std::function<void(CheckRecord&)>& body) {
  CheckRecord c = run_check(s.command, reference, body);
  if (c.verdict == "error") throw std::runtime_error(c.witnesses["error"].get<std::string>());
  return c;
}

void print_certificate(std::ostream& out, const Json& cert) {
  out << cert.at("certificate_type").get<std::string>() << ": " << cert.at("verdict").get<std::string>();
  if (cert.contains("failed_check")) out << " (failed check: " << cert.at("failed_check").get<std::string>() << ")";
  out << "\n";
  for (const auto& line : cert.at("narrative")) out << "  - " << line.get<std::string>() << "\n";
}

CompanionKnot load_companion(Session& s, const std::string& path, const std::string& rho) {
  const SeifertMatrix j = s.load(path);
  if (rho.empty()) return CompanionKnot::from_seifert(j);
  s.note_argument("rho", rho);
  return CompanionKnot::with_declared_rho(j, RhoValue::from_exact(parse_rational_arg(rho, "--rho")));
}

GraftedKnot make_graft(Session& s, const SeifertMatrix& base, CompanionKnot companion, const std::string& eta) {
  const AlexModule m = module_from_seifert(base);
  ModuleElement e = m.is_trivial() ? m.zero() : m.generator();
  if (!eta.empty()) {
    s.note_argument("eta", eta);
    e = m.is_trivial() ? m.zero() : m.scale(LaurentPoly(parse_coefficients(eta, "--eta")), e);
  }
  return graft(base, std::move(companion), e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcert: exact Seifert-matrix invariants and concordance certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<long long> seed;
  app.add_option("--seed", seed, "Reserved; all computation is deterministic");
  app.set_version_flag("--version", tool_version());

  Session session;
  std::string file, companion_file, base_file, basis_file, rho, eta, x_coeffs = "1", y_coeffs, omega_u, replay;
  long long max_k = 0;
  bool prime_powers_only = false, integral = false, minus_one = false;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    sub->add_flag("--json", session.json, "Emit a JSON report");
    if (needs_file) sub->add_option("file", file, "Seifert matrix file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* alex = add_common(app.add_subcommand("alex", "Alexander polynomial"), true);
  auto* module = add_common(app.add_subcommand("module", "Rational Alexander module"), true);
  auto* covers = add_common(app.add_subcommand("covers", "Branched cyclic cover homology orders"), true);
  covers->add_option("--max-k", max_k, "Largest cover degree")->required()->check(CLI::Range(2LL, 100000LL));
  covers->add_flag("--prime-powers", prime_powers_only, "Only prime-power degrees");
  auto* sig = add_common(app.add_subcommand("sig", "Levine-Tristram signature or its integral"), true);
  auto* sig_u = sig->add_option("--omega-u", omega_u, "Circle point ((1-u^2) + 2ui)/(1+u^2)");
  auto* sig_int = sig->add_flag("--integral", integral, "rho_0, the integral of the signature function");
  auto* sig_m1 = sig->add_flag("--minus-one", minus_one, "Signature at -1");
  sig_u->excludes(sig_int)->excludes(sig_m1);
  sig_int->excludes(sig_m1);
  auto* arf = add_common(app.add_subcommand("arf", "Arf invariant"), true);
  auto* foxmilnor = add_common(app.add_subcommand("foxmilnor", "Fox-Milnor condition"), true);
  auto* metabolizer = add_common(app.add_subcommand("metabolizer", "Verify a metabolizer"), true);
  metabolizer->add_option("--basis", basis_file, "Vector list file")->required()->check(CLI::ExistingFile);
  auto* blanch = add_common(app.add_subcommand("blanchfield", "Blanchfield pairing of f(t) g and h(t) g"), true);
  blanch->add_option("--x", x_coeffs, "Coefficients of f, constant term first (default 1)");
  blanch->add_option("--y", y_coeffs, "Coefficients of h, constant term first (default: same as --x)");
  auto* graft_cmd = add_common(app.add_subcommand("graft", "Graft a companion along eta"), true);
  graft_cmd->add_option("--companion", companion_file, "Companion matrix file")->required()->check(CLI::ExistingFile);
  graft_cmd->add_option("--rho", rho, "Declared rho of the companion");
  graft_cmd->add_option("--eta", eta, "eta = f(t) g, coefficients of f (default 1)");
  auto* certify = app.add_subcommand("certify", "Issue or replay solvability certificates");
  certify->add_flag("--json", session.json, "Emit a JSON report");
  certify->add_option("file", file, "Base Seifert matrix file")->check(CLI::ExistingFile);
  certify->add_option("--companion", companion_file, "Companion matrix file")->check(CLI::ExistingFile);
  certify->add_option("--rho", rho, "Declared rho of the companion");
  certify->add_option("--eta", eta, "eta = f(t) g, coefficients of f (default 1)");
  certify->add_option("--replay", replay, "Report to re-verify")->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("paper-verify", "Verify the seed-knot construction end to end");
  verify->add_flag("--json", session.json, "Emit a JSON report");
  verify->add_option("--companion", companion_file, "Companion matrix file (default: granny)")->check(CLI::ExistingFile);
  verify->add_option("--base", base_file, "Base matrix file (default: C)")->check(CLI::ExistingFile);
  verify->add_option("--rho", rho, "Declared rho of the companion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  session.command = sub->get_name();
  std::ostream& out = session.text;

  try {
    if (sub == alex) {
      const SeifertMatrix s = session.load(file);
      session.report.checks.push_back(single_check(session, "Alexander polynomial det(V^T - tV)", [&](CheckRecord& c) {
        const LaurentPoly delta = alexander_polynomial(s);
        c.witnesses["alexander"] = to_string(delta);
        c.witnesses["coefficients"] = to_json(delta.body());
        c.verdict = "pass";
        c.ok = true;
        out << alexander_name(delta.body()) << " = " << to_string(delta) << "\n";
      }));
    } else if (sub == module) {
      const SeifertMatrix s = session.load(file);
      session.report.checks.push_back(single_check(session, "Smith normal form of V^T - tV", [&](CheckRecord& c) {
        const AlexModule m = module_from_seifert(s);
        Json factors = Json::array();
        out << "invariant factors:";
        if (m.is_trivial()) out << " none (trivial module)";
        out << "\n";
        for (const auto& d : m.invariant_factors()) {
          factors.push_back(to_string(d));
          out << "  " << alexander_name(d) << " = " << to_string(d) << "\n";
        }
        out << "cyclic: " << (m.is_cyclic() ? "yes" : "no") << "\n";
        out << "dimension over Q: " << m.dimension() << "\n";
        c.witnesses["invariant_factors"] = factors;
        c.witnesses["cyclic"] = m.is_cyclic();
        c.witnesses["dimension"] = m.dimension();
        c.verdict = "pass";
        c.ok = true;
      }));
    } else if (sub == covers) {
      const SeifertMatrix s = session.load(file);
      session.note_argument("max-k", std::to_string(max_k));
      session.note_argument("prime-powers", prime_powers_only ? "1" : "0");
      session.report.checks.push_back(single_check(session, "|H_1| of k-fold branched covers, |res(Delta, t^k - 1)|",
                                                   [&](CheckRecord& c) {
        const LaurentPoly delta = alexander_polynomial(s);
        Json rows = Json::array();
        out << "k\torder\n";
        for (long long k = 2; k <= max_k; ++k) {
          if (prime_powers_only && !is_prime_power(k)) continue;
          const CoverOrder co = cover_homology_order(delta, k);
          rows.push_back(Json{{"k", k}, {"order", to_json(co.order)}});
          out << k << "\t" << (co.infinite() ? std::string("infinite") : to_string(co.order)) << "\n";
        }
        c.witnesses["covers"] = rows;
        c.verdict = "pass";
        c.ok = true;
      }));
    } else if (sub == sig) {
      const SeifertMatrix s = session.load(file);
      if (omega_u.empty() && !integral && !minus_one) throw InputError("sig: give --omega-u, --integral or --minus-one");
      if (!omega_u.empty()) session.note_argument("omega-u", omega_u);
      session.note_argument("mode", integral ? "integral" : (minus_one ? "minus-one" : "point"));
      const std::optional<Rational> u =
          omega_u.empty() ? std::nullopt : std::optional<Rational>(parse_rational_arg(omega_u, "--omega-u"));
      if (u && *u == 0) throw InputError("--omega-u 0 is omega = 1, which is excluded");
      session.report.checks.push_back(single_check(session, "Levine-Tristram signature", [&](CheckRecord& c) {
        if (integral) {
          const RhoValue r = rho_zero(s);
          c.witnesses["rho"] = to_json(r);
          out << r.to_string() << "\n";
        } else {
          const CirclePoint w = u ? CirclePoint::from_parameter(*u) : CirclePoint::minus_one();
          const int sigma = levine_tristram(s, w);
          c.witnesses["signature"] = sigma;
          out << sigma << "\n";
        }
        c.verdict = "pass";
        c.ok = true;
      }));
    } else if (sub == arf) {
      const SeifertMatrix s = session.load(file);
      session.report.checks.push_back(single_check(session, "Arf invariant from |Delta(-1)| mod 8", [&](CheckRecord& c) {
        const int a = arf_invariant(s);
        c.witnesses["arf"] = a;
        c.witnesses["alexander_at_minus_one"] = to_string(alexander_polynomial(s).body()(Rational(-1)));
        c.verdict = "pass";
        c.ok = true;
        out << a << "\n";
      }));
    } else if (sub == foxmilnor) {
      const SeifertMatrix s = session.load(file);
      session.report.checks.push_back(single_check(session, "Delta = f(t) f(1/t) up to units", [&](CheckRecord& c) {
        const LaurentPoly delta = alexander_polynomial(s);
        const bool ok = fox_milnor_check(delta);
        c.witnesses["alexander"] = to_string(delta);
        c.ok = ok;
        c.verdict = ok ? "pass" : "fail";
        out << (ok ? "pass" : "fail") << ": " << to_string(delta) << "\n";
      }));
    } else if (sub == metabolizer) {
      const SeifertMatrix s = session.load(file);
      std::vector<IntVector> basis;
      try {
        const std::string bytes = read_text_file(basis_file);
        session.digest_bytes += bytes;
        basis = parse_vector_list(bytes);
      } catch (const std::exception& e) {
        throw InputError(basis_file + ": " + e.what());
      }
      for (const auto& v : basis)
        if (v.size() != s.size()) throw InputError("metabolizer vector has the wrong length");
      session.report.checks.push_back(single_check(session, "the vectors span a metabolizer", [&](CheckRecord& c) {
        const bool ok = is_metabolizer(s, basis);
        c.ok = ok;
        c.verdict = ok ? "pass" : "fail";
        c.witnesses["vectors"] = basis.size();
        out << (ok ? "metabolizer" : "not a metabolizer") << "\n";
      }));
    } else if (sub == blanch) {
      const SeifertMatrix s = session.load(file);
      if (y_coeffs.empty()) y_coeffs = x_coeffs;
      session.note_argument("x", x_coeffs);
      session.note_argument("y", y_coeffs);
      const Poly f = parse_coefficients(x_coeffs, "--x");
      const Poly h = parse_coefficients(y_coeffs, "--y");
      session.report.checks.push_back(single_check(session, "Bl(f g, h g) on the cyclic module", [&](CheckRecord& c) {
        const AlexModule m = module_from_seifert(s);
        const ModuleElement g = m.generator();
        const ModuleElement x = m.scale(LaurentPoly(f), g);
        const ModuleElement y = m.scale(LaurentPoly(h), g);
        const BlanchfieldValue v = m.blanchfield(x, y);
        const bool hermitian = v == m.blanchfield(y, x).conjugate();
        c.witnesses["value"] = to_string(v);
        c.witnesses["hermitian"] = hermitian;
        c.witnesses["nontrivial"] = !v.is_zero();
        c.ok = hermitian;
        c.verdict = hermitian ? "pass" : "fail";
        out << "Bl(x, y) = " << to_string(v) << "\n";
        out << "nontrivial: " << (v.is_zero() ? "no" : "yes") << "\n";
        out << "Bl(y, x) = conj Bl(x, y): " << (hermitian ? "yes" : "no") << "\n";
      }));
    } else if (sub == graft_cmd) {
      const SeifertMatrix base = session.load(file);
      CompanionKnot j = load_companion(session, companion_file, rho);
      session.report.checks.push_back(single_check(session, "K(J, eta) keeps the Seifert form of the base",
                                                   [&](CheckRecord& c) {
        const GraftedKnot g = make_graft(session, base, j, eta);
        const LaurentPoly delta = alexander_polynomial(g.seifert());
        c.witnesses["alexander"] = to_string(delta);
        c.witnesses["arf"] = arf_invariant(g.seifert());
        c.witnesses["companion"] = to_json(g.companion);
        c.witnesses["eta"] = to_json(g.eta.coordinates);
        c.verdict = "pass";
        c.ok = true;
        out << "Seifert form: that of the base (" << g.seifert().size() << "x" << g.seifert().size() << ")\n";
        out << alexander_name(delta.body()) << " = " << to_string(delta) << "\n";
        out << "Arf: " << arf_invariant(g.seifert()) << "\n";
        out << "companion rho: " << g.companion.rho.to_string() << (g.companion.rho_declared ? " (declared)" : "")
            << "\n";
        out << "companion Arf: " << g.companion.arf << "\n";
      }));
    } else if (sub == certify) {
      if (!replay.empty()) {
        if (!file.empty() || !companion_file.empty()) throw InputError("certify: --replay takes no other inputs");
        Json recorded;
        try {
          const std::string bytes = read_text_file(replay);
          session.digest_bytes += bytes;
          recorded = Json::parse(bytes);
        } catch (const std::exception& e) {
          throw InputError(replay + ": " + e.what());
        }
        if (!recorded.contains("checks")) throw InputError(replay + ": not a report");
        session.report.checks = replay_report(recorded);
        if (session.report.checks.empty()) throw InputError(replay + ": report holds no certificates");
        for (const auto& c : session.report.checks)
          out << (c.ok ? "[MATCH] " : "[MISMATCH] ") << c.name << ": " << c.witnesses.value("certificate_type", Json("")).get<std::string>()
              << " " << c.witnesses.value("replayed_verdict", Json("")).get<std::string>() << "\n";
      } else {
        if (file.empty() || companion_file.empty()) throw InputError("certify: give FILE and --companion, or --replay");
        const SeifertMatrix base = session.load(file);
        CompanionKnot j = load_companion(session, companion_file, rho);
        const GraftedKnot g = make_graft(session, base, j, eta);
        auto issue = [&](const std::string& name, const std::string& reference, auto&& make, CertificateKind want) {
          CheckRecord c = run_check(name, reference, [&](CheckRecord& r) {
            const SolvabilityCertificate cert = make();
            r.witnesses["certificates"] = Json::array({to_json(cert)});
            r.verdict = to_string(cert.kind);
            r.ok = cert.kind == want;
            print_certificate(out, to_json(cert));
          });
          if (!c.witnesses.contains("certificates"))
            out << name << ": " << c.verdict << " (" << c.witnesses.value("error", Json("")).get<std::string>() << ")\n";
          session.report.checks.push_back(std::move(c));
        };
        issue("one_solvable", "K(J, eta) is (1)-solvable", [&] { return solvable_one_certificate(g); },
              CertificateKind::OneSolvable);
        issue("not_one_point_five_solvable", "K(J, eta) is not (1.5)-solvable",
              [&] { return not_one_point_five_certificate(g); }, CertificateKind::NotOnePointFiveSolvable);
        session.report.checks.push_back(run_check(
            "casson_gordon_vanishing", "Casson-Gordon invariants of K(J, eta) vanish", [&](CheckRecord& r) {
              const auto cert = casson_gordon_vanishing_certificate(g.seifert());
              const Json j_cert = to_json(cert, g.seifert());
              r.witnesses["certificates"] = Json::array({j_cert});
              r.verdict = cert.issued ? "Issued" : "Refused";
              r.ok = cert.issued;
              print_certificate(out, j_cert);
            }));
      }
    } else if (sub == verify) {
      PaperVerifyOptions options;
      if (!base_file.empty()) options.base = session.load(base_file);
      if (!companion_file.empty()) options.companion = session.load(companion_file);
      if (!rho.empty()) options.companion_rho = parse_rational_arg(rho, "--rho");
      session.report = paper_verify(options);
      int passed = 0;
      for (const auto& c : session.report.checks) {
        passed += c.ok ? 1 : 0;
        out << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.reference;
        if (!c.ok) {
          out << " (" << c.verdict;
          if (c.witnesses.contains("failed_check")) out << ", failed check " << c.witnesses["failed_check"].get<std::string>();
          if (c.witnesses.contains("error")) out << ": " << c.witnesses["error"].get<std::string>();
          out << ")";
        }
        out << "\n";
      }
      out << passed << "/" << session.report.checks.size() << " checks passed\n";
      if (session.json) {
        std::cout << to_json(session.report).dump(2) << "\n";
      } else {
        std::cout << session.text.str();
      }
      return session.report.passed() ? 0 : kExitRefusal;
    }
    return session.finish();
  } catch (const InputError& e) {
    std::cerr << "knotcert: " << e.what() << "\n";
    return kExitInput;
  } catch (const MatrixParseError& e) {
    std::cerr << "knotcert: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidSeifertMatrix& e) {
    std::cerr << "knotcert: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "knotcert: " << e.what() << "\n";
    return kExitRefusal;
  }
}
