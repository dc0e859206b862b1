#include "knotcert/obstruction.hpp"

#include "knotcert/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcert {

CompanionKnot CompanionKnot::from_seifert(const SeifertMatrix& s) {
  CompanionKnot c;
  c.seifert = s;
  c.rho = rho_zero(s);
  c.arf = arf_invariant(s);
  c.label = s.label();
  return c;
}

CompanionKnot CompanionKnot::with_declared_rho(const SeifertMatrix& s, RhoValue rho) {
  CompanionKnot c;
  c.seifert = s;
  c.rho = std::move(rho);
  c.arf = arf_invariant(s);
  c.label = s.label();
  c.rho_declared = true;
  return c;
}

GraftedKnot graft(const SeifertMatrix& base, CompanionKnot companion, const ModuleElement& eta) {
  const AlexModule m = module_from_seifert(base);
  ModuleElement reduced = m.element(eta.coordinates);
  return {base, std::move(companion), std::move(reduced)};
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OneSolvable:
      return "OneSolvable";
    case CertificateKind::NotOnePointFiveSolvable:
      return "NotOnePointFiveSolvable";
    case CertificateKind::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

Json grafted_json(const GraftedKnot& g) {
  return Json{{"base", to_json(g.base.entries())}, {"companion", to_json(g.companion)}, {"eta", to_json(g.eta.coordinates)}};
}

GraftedKnot grafted_from_json(const Json& j) {
  const SeifertMatrix base = SeifertMatrix::validate(int_matrix_from_json(j.at("base")));
  return graft(base, companion_from_json(j.at("companion")), {poly_vector_from_json(j.at("eta"))});
}

Json value_json(const BlanchfieldValue& v) {
  return Json{{"numerator", to_string(v.numerator())}, {"denominator", to_string(v.denominator())}};
}

SolvabilityCertificate inconclusive(SolvabilityCertificate c, std::string check, std::string why) {
  c.kind = CertificateKind::Inconclusive;
  c.failed_check = std::move(check);
  c.narrative.push_back(std::move(why));
  return c;
}

}  // namespace

Json to_json(const RhoValue& r) {
  if (r.exact) return Json{{"exact", to_string(*r.exact)}};
  return Json{{"midpoint", r.midpoint}, {"radius", r.radius}};
}

RhoValue rho_from_json(const Json& j) {
  if (j.contains("exact")) return RhoValue::from_exact(rational_from_json(j.at("exact")));
  return RhoValue::from_interval(j.at("midpoint").get<double>(), j.at("radius").get<double>());
}

Json to_json(const CompanionKnot& c) {
  return Json{{"label", c.label},
              {"seifert", to_json(c.seifert.entries())},
              {"rho", to_json(c.rho)},
              {"rho_declared", c.rho_declared},
              {"arf", c.arf}};
}

CompanionKnot companion_from_json(const Json& j) {
  const SeifertMatrix s =
      SeifertMatrix::validate(int_matrix_from_json(j.at("seifert")), j.value("label", std::string()));
  if (j.value("rho_declared", false)) return CompanionKnot::with_declared_rho(s, rho_from_json(j.at("rho")));
  return CompanionKnot::from_seifert(s);
}

SolvabilityCertificate solvable_one_certificate(const GraftedKnot& g) {
  SolvabilityCertificate c;
  c.certificate_type = "one_solvable";
  c.input = grafted_json(g);

  const Rational companion_at_minus_one = alexander_polynomial(g.companion.seifert).body()(Rational(-1));
  const LaurentPoly delta = alexander_polynomial(g.base);
  const bool fox_milnor = fox_milnor_check(delta);
  const int sigma = levine_tristram(g.base, CirclePoint::minus_one());
  c.witnesses = Json{{"companion_arf", g.companion.arf},
                     {"companion_alexander_at_minus_one", to_string(companion_at_minus_one)},
                     {"base_alexander", to_string(delta)},
                     {"base_fox_milnor", fox_milnor},
                     {"base_signature_at_minus_one", sigma}};

  c.narrative.push_back("eta is a class of the rational Alexander module of the base, so it lifts to the "
                        "infinite cyclic cover and lies in the first derived subgroup.");
  if (g.companion.arf != 0)
    return inconclusive(std::move(c), "companion_arf",
                        "The companion has Arf invariant 1 (|Delta(-1)| = " +
                            to_string(boost::multiprecision::abs(companion_at_minus_one)) +
                            " is not 1 or 7 mod 8), so it is not (0)-solvable and infection gives no (1)-solution.");
  c.narrative.push_back("The companion has Arf invariant 0, hence is (0)-solvable.");
  if (!fox_milnor)
    return inconclusive(std::move(c), "base_fox_milnor",
                        "The base Alexander polynomial is not of the form f(t) f(1/t), so the base is not slice.");
  if (sigma != 0)
    return inconclusive(std::move(c), "base_signature",
                        "The base has nonzero signature at -1, so the base is not slice.");
  c.narrative.push_back("The base passes the Fox-Milnor condition and has signature 0 at -1, the checks available "
                        "at the Seifert-form level for a slice base.");
  c.narrative.push_back("Infecting a slice knot along a curve in the first derived subgroup by an Arf-invariant-zero "
                        "knot yields a (1)-solvable knot.");
  c.kind = CertificateKind::OneSolvable;
  return c;
}

SolvabilityCertificate not_one_point_five_certificate(const GraftedKnot& g) {
  const AlexModule m = module_from_seifert(g.base);
  const PrimaryDecomposition structure = primary_structure(m);
  const auto subs = proper_submodules(m);
  if (subs.size() != 1)
    throw HypothesisFailure("the base module Q[t,t^-1]/(" + to_string(structure.prime) + ")^" +
                            std::to_string(structure.exponent) + " has " + std::to_string(subs.size()) +
                            " proper submodules; a unique proper submodule is required");

  SolvabilityCertificate c;
  c.certificate_type = "not_one_point_five_solvable";
  c.input = grafted_json(g);
  const Submodule& p0 = subs.front();
  c.witnesses = Json{{"module_order", to_string(m.invariant_factors().front())},
                     {"prime", to_string(structure.prime)},
                     {"exponent", structure.exponent},
                     {"p0", to_json(p0.generators.front().coordinates)},
                     {"p0_order", to_string(p0.order)},
                     {"companion_rho", to_json(g.companion.rho)},
                     {"companion_arf", g.companion.arf}};
  c.narrative.push_back("The base module is cyclic of order (" + to_string(structure.prime) +
                        ")^2, so its unique proper submodule P0 is generated by p * g.");

  if (g.companion.arf != 0)
    return inconclusive(std::move(c), "companion_arf",
                        "The companion has Arf invariant 1, so the grafted knot has no (1)-solution to which the "
                        "kernel argument applies.");

  const OrthogonalComplement oc = orthogonal_complement(m, p0);
  c.witnesses["p0_self_annihilating"] = oc.is_self_annihilating;
  if (!oc.is_self_annihilating)
    return inconclusive(std::move(c), "self_annihilation", "P0 is not self-annihilating under the Blanchfield form.");
  c.narrative.push_back("P0 equals its orthogonal complement, so it is the kernel into any (1)-solution.");

  const CharacterValue cv = character_value(m, g.eta, p0.generators.front());
  c.witnesses["pairing_eta_p0"] = value_json(cv.value);
  if (!cv.is_nontrivial)
    return inconclusive(std::move(c), "character",
                        "Bl(eta, p0) = 0, so the induced character need not be nontrivial on eta.");
  c.narrative.push_back("Bl(eta, p0) = " + to_string(cv.value) +
                        " is nonzero, so the character induced by p0 is nontrivial on eta.");

  if (!g.companion.rho.certainly_nonzero())
    return inconclusive(std::move(c), "companion_rho",
                        "rho of the companion is not certified nonzero (" + g.companion.rho.to_string() + ").");
  c.narrative.push_back("With the character nontrivial on eta, the rho-invariant of the zero surgery equals "
                        "rho(J) = " +
                        g.companion.rho.to_string() + ", which is nonzero.");
  c.narrative.push_back("A nonzero rho-invariant for the coefficient system induced by an element of the unique "
                        "self-annihilating submodule rules out a (1.5)-solution.");
  c.kind = CertificateKind::NotOnePointFiveSolvable;
  return c;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

struct Range {
  BigInt lo, hi;
};

// Smallest x in range with x a + y b = target and y in range.
std::optional<std::pair<BigInt, BigInt>> solve_pair(const BigInt& a, const BigInt& b, const BigInt& target,
                                                    const Range& xr, const Range& yr) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  BigInt g = r0;
  if (g < 0) {
    g = -g;
    s0 = -s0;
    t0 = -t0;
  }
  if (target % g != 0) return std::nullopt;
  const BigInt x0 = s0 * (target / g), y0 = t0 * (target / g);
  const BigInt dx = b / g, dy = -(a / g);  // x = x0 + dx s, y = y0 + dy s
  // dx, dy are nonzero because a, b are.
  auto bounds = [](const BigInt& base, const BigInt& step, const Range& r) {
    if (step > 0) return Range{ceil_div(r.lo - base, step), floor_div(r.hi - base, step)};
    return Range{ceil_div(r.hi - base, step), floor_div(r.lo - base, step)};
  };
  const Range sx = bounds(x0, dx, xr), sy = bounds(y0, dy, yr);
  const BigInt lo = std::max(sx.lo, sy.lo), hi = std::min(sx.hi, sy.hi);
  if (lo > hi) return std::nullopt;
  const BigInt s = dx > 0 ? lo : hi;
  return std::make_pair(x0 + dx * s, y0 + dy * s);
}

constexpr long long kSearchBudget = 10'000'000;

// First (lexicographic) integer vector C with C_j in ranges and
// sum C_j a_j = 0.
std::optional<std::vector<BigInt>> find_vanishing(const std::vector<BigInt>& a, const std::vector<Range>& ranges,
                                                  bool* over_budget) {
  const std::size_t k = a.size();
  BigInt work = 1;
  for (std::size_t j = 0; j + 2 < k; ++j) work *= ranges[j].hi - ranges[j].lo + 1;
  if (work > kSearchBudget) {
    *over_budget = true;
    return std::nullopt;
  }
  *over_budget = false;

  auto search_from = [&](std::vector<BigInt> prefix) -> std::optional<std::vector<BigInt>> {
    // prefix holds fixed values for the first entries; enumerate the rest of
    // the first k - 2 lexicographically.
    const std::size_t fixed = prefix.size();
    std::vector<BigInt> c = prefix;
    for (std::size_t j = fixed; j + 2 < k; ++j) c.push_back(ranges[j].lo);
    for (;;) {
      BigInt partial = 0;
      for (std::size_t j = 0; j + 2 < k; ++j) partial += c[j] * a[j];
      if (auto sol = solve_pair(a[k - 2], a[k - 1], -partial, ranges[k - 2], ranges[k - 1])) {
        std::vector<BigInt> out = c;
        out.push_back(sol->first);
        out.push_back(sol->second);
        return out;
      }
      bool advanced = false;
      for (std::size_t pos = k - 2; pos > fixed && !advanced;) {
        --pos;
        if (c[pos] < ranges[pos].hi) {
          ++c[pos];
          for (std::size_t q = pos + 1; q + 2 < k; ++q) c[q] = ranges[q].lo;
          advanced = true;
        }
      }
      if (!advanced) return std::nullopt;
    }
  };

  if (k == 2) return search_from({});
  // Parallel over chunks of the first coordinate; the lowest value with a
  // solution wins.
  const BigInt span = ranges[0].hi - ranges[0].lo + 1;
  const long long chunks = std::min<long long>(64, span.convert_to<long long>());
  const auto results = parallel_map(static_cast<std::size_t>(chunks), [&](std::size_t i) {
    const BigInt from = ranges[0].lo + span * BigInt(static_cast<long long>(i)) / chunks;
    const BigInt to = ranges[0].lo + span * BigInt(static_cast<long long>(i + 1)) / chunks;
    for (BigInt v = from; v < to; ++v)
      if (auto r = search_from({v})) return r;
    return std::optional<std::vector<BigInt>>();
  });
  for (const auto& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace

SolvabilityCertificate combination_obstruction(const std::vector<CombinationTerm>& terms, long long coefficient_bound) {
  if (terms.empty()) throw std::invalid_argument("combination_obstruction: empty term list");
  if (coefficient_bound < 0) throw std::invalid_argument("combination_obstruction: negative coefficient bound");
  SolvabilityCertificate c;
  c.certificate_type = "combination";
  Json input_terms = Json::array();
  for (const auto& t : terms) {
    if (t.multiplicity == 0) throw std::invalid_argument("combination_obstruction: zero multiplicity");
    if (t.knot.base != terms.front().knot.base)
      throw std::invalid_argument("combination_obstruction: every term must share the base Seifert form");
    input_terms.push_back(Json{{"grafted", grafted_json(t.knot)}, {"multiplicity", t.multiplicity}});
  }
  c.input = Json{{"terms", input_terms}, {"coefficient_bound", coefficient_bound}};

  // Terms with negative multiplicity enter as -K_i, whose companion has
  // rho(-J) = -rho(J).
  std::vector<RhoValue> rho;
  Json rho_json = Json::array();
  for (const auto& t : terms) {
    rho.push_back(t.multiplicity > 0 ? t.knot.companion.rho : -t.knot.companion.rho);
    rho_json.push_back(to_json(rho.back()));
  }
  c.witnesses = Json{{"signed_rho", rho_json}, {"coefficient_bound", coefficient_bound}};

  const SolvabilityCertificate lead = not_one_point_five_certificate(terms.front().knot);
  c.witnesses["leading_term"] = to_json(lead);
  if (lead.kind != CertificateKind::NotOnePointFiveSolvable)
    return inconclusive(std::move(c), "leading_term:" + lead.failed_check,
                        "The leading term has no not-(1.5)-solvability witness.");
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].knot.companion.arf != 0)
      return inconclusive(std::move(c), "companion_arf",
                          "Companion " + std::to_string(i + 1) + " has Arf invariant 1, so its term has no (1)-solution.");
  c.narrative.push_back("A (1.5)-solution for the combination would give rho(J_1) + sum c_i rho(J_i) = 0 with "
                        "nonnegative integers c_i.");

  const int lead_sign = rho.front().certified_sign();
  const bool same_sign =
      std::all_of(rho.begin(), rho.end(), [&](const RhoValue& r) { return r.certified_sign() == lead_sign; });
  if (same_sign) {
    c.witnesses["method"] = "same_sign";
    c.narrative.push_back("Every signed rho is certified to have the sign of rho(J_1), so the sum is nonzero for "
                          "every choice of nonnegative c_i.");
    c.kind = CertificateKind::NotOnePointFiveSolvable;
    return c;
  }
  const bool all_exact = std::all_of(rho.begin(), rho.end(), [](const RhoValue& r) { return r.is_exact(); });
  if (!all_exact)
    return inconclusive(std::move(c), "rho_intervals",
                        "Some rho values are enclosures of mixed or uncertain sign; the bounded search needs exact values.");

  // Merge equal values: a group of size m takes a total coefficient in
  // [0, m * bound], the leading group one more.
  BigInt common = 1;
  for (const auto& r : rho) common = boost::multiprecision::lcm(common, denominator_of(*r.exact));
  std::vector<BigInt> values;
  std::vector<Range> ranges;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const BigInt v = numerator_of(*rho[i].exact * common);
    if (v == 0 && i != 0) continue;
    auto it = std::find(values.begin(), values.end(), v);
    std::size_t gidx;
    if (it == values.end()) {
      values.push_back(v);
      ranges.push_back({i == 0 ? BigInt(1) : BigInt(0), i == 0 ? BigInt(1) : BigInt(0)});
      members.emplace_back();
      gidx = values.size() - 1;
    } else {
      gidx = static_cast<std::size_t>(it - values.begin());
    }
    ranges[gidx].hi += coefficient_bound;
    members[gidx].push_back(i);
  }

  bool over_budget = false;
  const auto solution = values.size() >= 2 ? find_vanishing(values, ranges, &over_budget) : std::nullopt;
  c.witnesses["method"] = "exhaustive_search";
  if (over_budget)
    return inconclusive(std::move(c), "search_budget",
                        "The bounded coefficient search exceeds its iteration budget.");
  if (solution) {
    // Spread each group total over its members, at most `bound` each.
    Json coeffs = Json::array();
    std::vector<BigInt> per_term(terms.size(), BigInt(0));
    for (std::size_t gi = 0; gi < members.size(); ++gi) {
      BigInt remaining = (*solution)[gi] - (gi == 0 ? 1 : 0);
      for (std::size_t idx : members[gi]) {
        const BigInt take = std::min(remaining, BigInt(coefficient_bound));
        per_term[idx] = take;
        remaining -= take;
      }
    }
    for (const auto& v : per_term) coeffs.push_back(to_json(v));
    c.witnesses["vanishing_coefficients"] = coeffs;
    return inconclusive(std::move(c), "vanishing_combination",
                        "Coefficients within the bound make rho(J_1) + sum c_i rho(J_i) vanish.");
  }
  c.narrative.push_back("No coefficients 0 <= c_i <= " + std::to_string(coefficient_bound) +
                        " make the sum vanish (exact search). Integral linear independence of the rho values is "
                        "not verified beyond this bound.");
  c.kind = CertificateKind::NotOnePointFiveSolvable;
  return c;
}

Json to_json(const SolvabilityCertificate& c) {
  Json j{{"certificate_type", c.certificate_type},
         {"verdict", to_string(c.kind)},
         {"input", c.input},
         {"witnesses", c.witnesses},
         {"narrative", c.narrative}};
  if (!c.failed_check.empty()) j["failed_check"] = c.failed_check;
  return j;
}

Json to_json(const CassonGordonCertificate& c, const SeifertMatrix& s) {
  Json stripped = Json::array();
  for (const auto& f : c.criterion.stripped_factors) stripped.push_back(Json{{"n", f.n}, {"multiplicity", f.multiplicity}});
  Json criterion{{"passes", c.criterion.passes}, {"stripped_factors", stripped}};
  if (c.criterion.witness) criterion["witness"] = to_string(*c.criterion.witness);
  Json covers = Json::array();
  for (const auto& co : c.scan) covers.push_back(Json{{"k", co.k}, {"order", to_json(co.order)}});
  Json j{{"certificate_type", "casson_gordon_vanishing"},
         {"verdict", c.issued ? "Issued" : "Refused"},
         {"input", Json{{"seifert", to_json(s.entries())}, {"prime_power_bound", c.prime_power_bound}}},
         {"witnesses", Json{{"criterion", criterion}, {"covers", covers}}}};
  std::vector<std::string> narrative;
  if (c.issued) {
    narrative.push_back("After removing Phi_n factors with n divisible by three distinct primes nothing remains, so "
                        "every prime-power branched cyclic cover is a rational homology sphere.");
    narrative.push_back("Independently, the resultant scan finds first homology of order 1 for every prime power up "
                        "to the bound.");
    narrative.push_back("Casson-Gordon invariants therefore vanish.");
  } else {
    narrative.push_back(c.refusal);
    j["failed_check"] = c.failing_cover ? "cover_order" : "criterion";
  }
  if (c.failing_cover)
    j["witnesses"]["failing_cover"] = Json{{"k", c.failing_cover->k}, {"order", to_json(c.failing_cover->order)}};
  j["narrative"] = narrative;
  return j;
}

Json replay_certificate(const Json& certificate) {
  const std::string type = certificate.at("certificate_type").get<std::string>();
  const Json& input = certificate.at("input");
  if (type == "one_solvable") return to_json(solvable_one_certificate(grafted_from_json(input)));
  if (type == "not_one_point_five_solvable") return to_json(not_one_point_five_certificate(grafted_from_json(input)));
  if (type == "combination") {
    std::vector<CombinationTerm> terms;
    for (const auto& t : input.at("terms"))
      terms.push_back({grafted_from_json(t.at("grafted")), t.at("multiplicity").get<long long>()});
    return to_json(combination_obstruction(terms, input.at("coefficient_bound").get<long long>()));
  }
  if (type == "casson_gordon_vanishing") {
    const SeifertMatrix s = SeifertMatrix::validate(int_matrix_from_json(input.at("seifert")));
    return to_json(casson_gordon_vanishing_certificate(s, input.at("prime_power_bound").get<long long>()), s);
  }
  throw std::invalid_argument("unknown certificate type: " + type);
}

}  // namespace knotcert
