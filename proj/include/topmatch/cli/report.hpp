#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "topmatch/audit.hpp"
#include "topmatch/transcript_io.hpp"

namespace topmatch::cli {

/// Proven statements must never fail; conjectures may.
enum class CheckKind { Theorem, Conjecture };

inline const char* to_string(CheckKind k) { return k == CheckKind::Theorem ? "theorem" : "conjecture"; }

struct ReportCheck {
  std::string name;
  CheckKind kind = CheckKind::Theorem;
  CheckOutcome outcome = CheckOutcome::Pass;
  std::string detail;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t vacuous = 0;
};

struct VerificationReport {
  std::string command;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::vector<ReportCheck> checks;
  json counterexamples = json::array();
  double wall_clock_seconds = 0;
  std::size_t cache_hits = 0;

  static constexpr std::size_t kMaxCounterexamples = 10;

  void add_counterexample(const std::string& check, json payload) {
    if (counterexamples.size() < kMaxCounterexamples)
      counterexamples.push_back({{"check", check}, {"payload", std::move(payload)}});
  }

  bool theorem_violation() const {
    for (const auto& c : checks)
      if (c.kind == CheckKind::Theorem && c.outcome == CheckOutcome::Fail) return true;
    return false;
  }
  bool discovery() const {
    for (const auto& c : checks)
      if (c.kind == CheckKind::Conjecture && c.outcome == CheckOutcome::Fail) return true;
    return false;
  }
  /// "PASS", "THEOREM VIOLATION" or "DISCOVERY"; a violation outranks a
  /// discovery.
  std::string status() const {
    if (theorem_violation()) return "THEOREM VIOLATION";
    if (discovery()) return "DISCOVERY";
    return "PASS";
  }
  int exit_code() const { return status() == "PASS" ? 0 : 1; }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name},
                    {"kind", to_string(c.kind)},
                    {"outcome", topmatch::to_string(c.outcome)},
                    {"detail", c.detail},
                    {"instances", c.instances},
                    {"violations", c.violations},
                    {"vacuous", c.vacuous}});
    return {{"command", command},          {"parameters", parameters},
            {"seed", seed},                {"checks", cs},
            {"counterexamples", counterexamples}, {"wall_clock_seconds", wall_clock_seconds},
            {"engine_version", kEngineVersion},   {"cache_hits", cache_hits},
            {"status", status()}};
  }

  void print_table(std::ostream& os) const {
    os << command << "  (seed " << seed << ", " << kEngineVersion << ")\n";
    json shown = parameters;
    if (shown.is_object()) shown.erase("graph");
    if (!shown.empty()) os << "  parameters: " << shown.dump() << "\n";
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
      os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(10)
         << to_string(c.kind) << "  " << std::setw(7) << topmatch::to_string(c.outcome) << "  " << c.detail << "\n";
    }
    for (const auto& ce : counterexamples) os << "  counterexample [" << ce.at("check").get<std::string>() << "] "
                                              << ce.at("payload").dump() << "\n";
    os << "  cache hits: " << cache_hits << "   wall clock: " << std::fixed << std::setprecision(3)
       << wall_clock_seconds << " s\n";
    os << "RESULT: " << status() << "\n";
  }
};

}  // namespace topmatch::cli
