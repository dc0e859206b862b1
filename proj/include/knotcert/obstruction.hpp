#pragma once

// Grafting at the level of Seifert forms, and the (1)-solvable /
// not-(1.5)-solvable certificates built from the Blanchfield form and the
// rho-invariants of the companions.

#include "knotcert/alexander_module.hpp"
#include "knotcert/branched_covers.hpp"
#include "knotcert/json_codec.hpp"
#include "knotcert/signature.hpp"

#include <string>
#include <vector>

namespace knotcert {

/// A hypothesis of the not-(1.5)-solvability argument fails for the base
/// (e.g. its module has no proper submodule).
class HypothesisFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CompanionKnot {
  SeifertMatrix seifert = SeifertMatrix::unknot();
  RhoValue rho;
  int arf = 0;
  std::string label;
  bool rho_declared = false;  // rho supplied by the caller, not computed

  /// rho from rho_zero, Arf from the Alexander polynomial.
  static CompanionKnot from_seifert(const SeifertMatrix& s);
  /// Caller-declared rho (for companions whose rho is known by other means).
  static CompanionKnot with_declared_rho(const SeifertMatrix& s, RhoValue rho);
};

/// K(J, eta). The Seifert form is the base's; only the companion and eta
/// carry new information.
struct GraftedKnot {
  SeifertMatrix base;
  CompanionKnot companion;
  ModuleElement eta;

  const SeifertMatrix& seifert() const { return base; }
};

/// Throws std::invalid_argument when eta does not live in the base module.
GraftedKnot graft(const SeifertMatrix& base, CompanionKnot companion, const ModuleElement& eta);

enum class CertificateKind { OneSolvable, NotOnePointFiveSolvable, Inconclusive };

std::string to_string(CertificateKind k);

struct SolvabilityCertificate {
  std::string certificate_type;  // one_solvable, not_one_point_five_solvable, combination
  CertificateKind kind = CertificateKind::Inconclusive;
  std::string failed_check;  // empty unless Inconclusive
  Json input;                // everything needed to replay
  Json witnesses;
  std::vector<std::string> narrative;
};

SolvabilityCertificate solvable_one_certificate(const GraftedKnot& g);

/// Throws UnsupportedModule for bases outside the cyclic primary class and
/// HypothesisFailure when the base module lacks a unique proper submodule.
SolvabilityCertificate not_one_point_five_certificate(const GraftedKnot& g);

struct CombinationTerm {
  GraftedKnot knot;
  long long multiplicity;  // nonzero; negative means the reverse mirror
};

constexpr long long kDefaultCoefficientBound = 1'000'000;

/// Searches for 0 <= c_i <= bound with rho(J_1) + sum c_i rho(J_i) = 0; the
/// certificate is issued when none exists. Throws on an empty term list.
SolvabilityCertificate combination_obstruction(const std::vector<CombinationTerm>& terms,
                                               long long coefficient_bound = kDefaultCoefficientBound);

Json to_json(const SolvabilityCertificate& c);
Json to_json(const CassonGordonCertificate& c, const SeifertMatrix& s);
Json to_json(const RhoValue& r);
RhoValue rho_from_json(const Json& j);

Json to_json(const CompanionKnot& c);
CompanionKnot companion_from_json(const Json& j);

/// Recomputes a serialized certificate from its "input" block.
Json replay_certificate(const Json& certificate);

}  // namespace knotcert
