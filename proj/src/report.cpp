#include "nldim/report.hpp"

#include <sstream>

namespace nldim {

nlohmann::json to_json(const ComputeRecord& record) {
  return {{"schema", kReportSchema},
          {"invariant", record.invariant},
          {"value", record.value},
          {"basis", record.basis},
          {"theorem_refs", record.theorem_refs},
          {"elapsed_ms", record.elapsed_ms}};
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"graph6", f.graph}, {"expected", f.expected}, {"actual", f.actual}, {"detail", f.detail}});
  return {{"schema", kReportSchema},
          {"invariant", "verification"},
          {"theorem_refs", {report.theorem}},
          {"statement", report.statement},
          {"status", std::string(to_string(report.status()))},
          {"pass", report.passed()},
          {"seed", report.seed},
          {"max_n", report.max_n},
          {"samples", report.samples},
          {"instances", report.instances},
          {"budget_exceeded", report.budget_exceeded},
          {"failures", failures},
          {"notes", report.notes},
          {"elapsed_ms", report.elapsed_ms}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.theorem << ": " << to_string(report.status()) << " (" << report.instances << " instances, "
      << report.failures.size() << " failures, " << report.budget_exceeded << " over budget, seed " << report.seed
      << ", " << static_cast<long long>(report.elapsed_ms) << " ms)\n";
  out << "  " << report.statement << "\n";
  for (const auto& f : report.failures)
    out << "  FAIL " << (f.graph.empty() ? "-" : f.graph) << ": " << f.detail << ": expected " << f.expected
        << ", got " << f.actual << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace nldim
