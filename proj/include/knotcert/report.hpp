#pragma once

// Machine-readable reports: one record per check, canonical JSON (sorted
// keys), and the end-to-end verification of the seed-knot construction.

#include "knotcert/json_codec.hpp"
#include "knotcert/seifert.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotcert {

inline constexpr const char* kReportSchema = "knotcert.report/1";

struct CheckRecord {
  std::string name;
  std::string verdict;  // "pass", "fail", "error", or a certificate verdict
  bool ok = false;
  Json witnesses = Json::object();
  std::string reference;  // the claim being checked, in words
  double wall_time_ms = 0.0;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<CheckRecord> checks;

  bool passed() const;
};

std::string tool_version();
std::string sha256_hex(std::string_view bytes);

Json to_json(const CheckRecord& c);
Json to_json(const Report& r);

/// Runs `body`, timing it. Exceptions become verdict "error" with the message
/// in witnesses["error"].
CheckRecord run_check(const std::string& name, const std::string& reference,
                      const std::function<void(CheckRecord&)>& body);

/// Walks every "certificates" array in the report's witnesses, recomputes
/// each certificate from its input block and compares the JSON. Returns one
/// record per certificate.
std::vector<CheckRecord> replay_report(const Json& report);

struct PaperVerifyOptions {
  std::optional<SeifertMatrix> base;       // default: matrix C
  std::optional<SeifertMatrix> companion;  // default: granny
  std::optional<Rational> companion_rho;   // declared rho for the companion
};

/// The ten checks of the seed construction, in order.
Report paper_verify(const PaperVerifyOptions& options = {});

/// Metabolizer candidate for B: (e_i, J e_i), i = 1..8.
std::vector<IntVector> diagonal_metabolizer_basis();

}  // namespace knotcert
