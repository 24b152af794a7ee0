#pragma once

#include <string>
#include <vector>

namespace bikraw {

/// One verified identity instance. `residual` is the exact residual norm in
/// exact mode (as a rational string) and the scaled relative residual in float
/// mode (shortest decimal).
struct CaseResult {
  std::string id;
  std::string residual;
  double residual_value = 0.0;  // numeric view of `residual`
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::string mode;        // "exact" | "float"
  double tolerance = 0.0;  // float mode only
  std::vector<CaseResult> cases;

  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace bikraw
