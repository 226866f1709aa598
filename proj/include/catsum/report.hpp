#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace catsum {

/// One index at which a checked claim did not hold, with a verdict string.
/// Verdicts are either "violated" (the inequality/identity is genuinely
/// false there) or "inconclusive" (the precision cap was reached without a
/// rigorous decision), optionally followed by detail text.
struct Failure {
  long n = 0;
  std::string verdict;
};

/// Outcome of a claim sweep over an index range.
///
/// `failures` holds every index where the claim, as checked, does not hold;
/// pass() is true iff it is empty.  Threshold-style claims (those whose
/// small-index behaviour differs from the asymptotic statement) record the
/// smallest index from which each inequality holds through the end of the
/// range in `thresholds`, and list the pre-threshold indices in
/// `exceptions` instead of `failures`.
struct VerificationReport {
  std::string claim_id;
  long n_lo = 0;
  long n_hi = 0;
  long checked = 0;  // n_hi - n_lo + 1
  std::vector<Failure> failures;
  std::vector<Failure> exceptions;
  std::map<std::string, long> thresholds;
  std::vector<std::string> notes;
  long max_precision_used = 0;  // 0 means exact integer arithmetic only
  long escalations = 0;         // times adaptive precision had to be raised

  bool pass() const { return failures.empty(); }
  bool inconclusive() const {
    for (const auto& f : failures)
      if (f.verdict.rfind("inconclusive", 0) == 0) return true;
    return false;
  }
};

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace catsum
