#include "xyk/report.hpp"

#include <sstream>

namespace xyk {

std::string status_str(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::VerifiedNecessary: return "verified (necessary conditions)";
    case Status::Refuted: return "refuted";
    case Status::PaperCited: return "paper-cited";
    case Status::BudgetExceeded: return "budget-exceeded";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Status status_from_str(const std::string& s) {
  if (s == "verified") return Status::Verified;
  if (s == "verified (necessary conditions)" || s == "verified-necessary")
    return Status::VerifiedNecessary;
  if (s == "refuted") return Status::Refuted;
  if (s == "paper-cited" || s == "cited") return Status::PaperCited;
  if (s == "budget-exceeded" || s == "budget") return Status::BudgetExceeded;
  if (s == "inconclusive") return Status::Inconclusive;
  throw std::invalid_argument("unknown status: " + s);
}

int Report::param(const std::string& name, int fallback) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return fallback;
}

void Report::set_param(const std::string& name, int value) {
  for (auto& [k, v] : params)
    if (k == name) {
      v = value;
      return;
    }
  params.push_back({name, value});
}

bool Report::all_checks_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::ordered_json Report::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  if (!kind.empty()) j["kind"] = kind;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["status"] = status_str(status);
  if (!order_desc.empty()) j["order"] = order_desc;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["witnesses"] = witnesses;
  j["notes"] = notes;
  nlohmann::ordered_json gj;
  gj["pairs_considered"] = gb.pairs_considered;
  gj["pairs_skipped_coprime"] = gb.pairs_skipped_coprime;
  gj["pairs_reduced"] = gb.pairs_reduced;
  gj["reduction_steps"] = gb.reduction_steps;
  gj["max_poly_terms"] = gb.max_poly_terms;
  j["gb"] = gj;
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::summary_line() const {
  std::ostringstream os;
  os << status_str(status) << "  " << claim;
  if (!kind.empty() || !params.empty()) {
    os << " [";
    bool first = true;
    if (!kind.empty()) {
      os << "kind=" << kind;
      first = false;
    }
    for (const auto& [k, v] : params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << "]";
  }
  os << "  (" << static_cast<long>(elapsed_ms) << " ms)";
  return os.str();
}

}  // namespace xyk
