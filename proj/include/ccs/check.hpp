#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ccs/error.hpp"

namespace ccs {

/// Outcome of one identity check. `detail` names the first counterexample.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

/// Throws IdentityViolation if the check failed.
inline const CheckResult& require(const CheckResult& r) {
  if (!r.passed) throw Error(Errc::identity_violation, r.name + ": " + r.detail);
  return r;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace ccs
