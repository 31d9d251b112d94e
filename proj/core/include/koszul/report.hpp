#pragma once

#include <string>
#include <vector>

namespace koszul {

// Outcome of checking one stated fact against computed data.  Refuted is
// reserved for a clean numeric contradiction; anything the engine could not
// finish is NotEvaluated with the reason carried alongside.
enum class Verdict { Verified, Refuted, NotEvaluated };

const char* to_string(Verdict v);

struct CheckResult {
  std::string name;      // stable identifier, e.g. "grade_bound p=4 q=2"
  Verdict verdict = Verdict::NotEvaluated;
  std::string detail;    // numbers involved, or the reason nothing was computed
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, Verdict v, std::string detail = "");
  bool all_verified() const;
  bool any_refuted() const;
  std::size_t count(Verdict v) const;
};

}  // namespace koszul
