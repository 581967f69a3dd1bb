#ifndef XYK_REPORT_HPP
#define XYK_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xyk/groebner.hpp"

namespace xyk {

enum class Status {
  Verified,
  VerifiedNecessary,  // "verified (necessary conditions)"
  Refuted,
  PaperCited,  // established in the literature, not machine-checked here
  BudgetExceeded,
  Inconclusive,  // a sufficient-condition witness failed without a refutation
};

std::string status_str(Status s);
Status status_from_str(const std::string& s);

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structured pass/fail record of one theorem check: claim id, instance
/// parameters, the order used, verdict, witnesses and statistics. Reports are
/// byte-reproducible apart from the timing fields.
struct Report {
  std::string claim;
  std::string kind;  // matrix kind, empty when not applicable
  std::vector<std::pair<std::string, int>> params;
  Status status = Status::Verified;
  std::string order_desc;
  std::vector<SubCheck> checks;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  GBStats gb;
  double elapsed_ms = 0;

  int param(const std::string& name, int fallback = -1) const;
  void set_param(const std::string& name, int value);

  bool all_checks_passed() const;
  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string summary_line() const;
};

}  // namespace xyk

#endif
