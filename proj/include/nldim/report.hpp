#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nldim/campaigns.hpp"
#include "nldim/graph.hpp"

namespace nldim {

inline constexpr int kReportSchema = 1;

/// One computed invariant, as emitted by the CLI.
struct ComputeRecord {
  std::string invariant;
  long long value = 0;
  VertexList basis;
  std::vector<std::string> theorem_refs;
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const ComputeRecord& record);
nlohmann::json to_json(const VerificationReport& report);

/// Human-readable rendering of a report, one summary line plus failures.
std::string to_text(const VerificationReport& report);

}  // namespace nldim
