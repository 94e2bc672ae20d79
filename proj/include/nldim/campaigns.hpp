#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>
#include <string>
#include <vector>

#include "nldim/solver.hpp"

namespace nldim {

enum class Execution { Serial, Parallel };

struct CampaignParams {
  std::optional<int> max_n;       // campaign-specific default when unset
  std::optional<int> samples;     // campaign-specific default when unset
  std::uint64_t seed = 1;
  Execution execution = Execution::Parallel;
  bool exploratory = false;       // extra unasserted observations (girth 5/6 for thm53)
  SolverOptions solver = SolverOptions::from_environment();
};

struct Failure {
  std::string graph;     // graph6
  std::string expected;
  std::string actual;
  std::string detail;

  friend bool operator<(const Failure& a, const Failure& b) {
    return std::tie(a.graph, a.detail, a.expected, a.actual) < std::tie(b.graph, b.detail, b.expected, b.actual);
  }
};

enum class ReportStatus { Pass, Fail, BudgetExceeded };

struct VerificationReport {
  std::string theorem;
  std::string statement;
  std::uint64_t seed = 0;
  int max_n = 0;
  int samples = 0;
  std::size_t instances = 0;
  std::size_t budget_exceeded = 0;
  std::vector<Failure> failures;    // sorted
  std::vector<std::string> notes;   // observations that are reported, not asserted
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty() && budget_exceeded == 0; }
  ReportStatus status() const {
    if (!failures.empty()) return ReportStatus::Fail;
    return budget_exceeded ? ReportStatus::BudgetExceeded : ReportStatus::Pass;
  }
};

std::string_view to_string(ReportStatus status);

/// eq1, prop21, prop22, thm31, thm32, thm33, thm41, prop51, prop52, thm53, thm61.
std::vector<std::string> campaign_ids();

/// Runs one campaign. Throws std::invalid_argument for unknown ids.
VerificationReport verify(const std::string& theorem, const CampaignParams& params);

/// Exhaustive checks over connected labeled graphs of order exactly n, for a
/// subset of {eq1, prop21, prop51, prop52}.
VerificationReport check_enumeration(int n, const std::vector<std::string>& checks, bool canonical,
                                     const CampaignParams& params);

}  // namespace nldim
