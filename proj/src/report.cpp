#include "catsum/report.hpp"

namespace catsum {

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["claim_id"] = report.claim_id;
  j["range"] = {report.n_lo, report.n_hi};
  j["checked"] = report.checked;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"n", f.n}, {"verdict", f.verdict}});
  j["failures"] = failures;
  if (!report.exceptions.empty()) {
    auto exceptions = nlohmann::ordered_json::array();
    for (const auto& f : report.exceptions)
      exceptions.push_back({{"n", f.n}, {"verdict", f.verdict}});
    j["exceptions"] = exceptions;
  }
  if (!report.thresholds.empty()) j["thresholds"] = report.thresholds;
  if (!report.notes.empty()) j["notes"] = report.notes;
  j["max_precision_used"] = report.max_precision_used;
  j["escalations"] = report.escalations;
  j["status"] = report.pass() ? "pass" : "fail";
  return j;
}

}  // namespace catsum
