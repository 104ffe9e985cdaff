#pragma once

#include <string>
#include <vector>

#include "params.hpp"

namespace fracwave {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  double grid_tol = 1e-6;
  // Multiplies kappa(alpha) inside the transfer-identity check. Exists as a
  // mutation hook so the suite can be shown to catch a wrong constant.
  double kappa_scale = 1.0;
};

// Built-in invariant suite: transfer identity, convolution oracles, the
// composition identity, conjugate symmetry of every evaluator, the
// exceptional eigenpair, resolvent coefficients, and the energy balance of
// short simulation runs. eta = 0 marks the zero-frequency-adjacent checks
// skipped (0 belongs to the spectrum there).
std::vector<CheckResult> run_verification(const SystemParams& p,
                                          const VerifyOptions& opt = {});

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed && !c.skipped) return false;
  return true;
}

}  // namespace fracwave
