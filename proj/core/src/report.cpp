#include "koszul/report.hpp"

#include <algorithm>

namespace koszul {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::NotEvaluated: return "not-evaluated";
  }
  return "unknown";
}

void VerificationReport::add(std::string name, Verdict v, std::string detail) {
  checks.push_back({std::move(name), v, std::move(detail)});
}

bool VerificationReport::all_verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.verdict == Verdict::Verified;
  });
}

bool VerificationReport::any_refuted() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.verdict == Verdict::Refuted;
  });
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [v](const CheckResult& c) { return c.verdict == v; }));
}

}  // namespace koszul
