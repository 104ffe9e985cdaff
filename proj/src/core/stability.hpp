#pragma once

#include <vector>

#include "params.hpp"

namespace fracwave {

// Outcome of the strong-stability scan. When violated, (k1,k2) names the
// integer pair whose exceptional coupling value matches b^2, b_exceptional
// is its positive root, and lambda_imag the undamped eigenfrequency.
struct ScWitness {
  bool violated = false;
  int k1 = 0, k2 = 0;
  double b_exceptional = 0.0;
  double lambda_imag = 0.0;
};

// Scan 1 <= k1,k2 <= k_max for b^2 = (k1^2 - a k2^2)(a k1^2 - k2^2) pi^2 /
// ((a+1)(k1^2+k2^2)) within 1e-9 relative. Signs of k1,k2 are immaterial.
ScWitness sc_check(const SystemParams& p, int k_max);

// Closed-form undamped eigenpair at the exceptional coupling of (k1,k2):
// b > 0, lambda > 0 with eigenvalue i*lambda, and the sine coefficients of
// u(x) = i*(coeff_k1 sin(k1 pi x) + coeff_k2 sin(k2 pi x)).
struct ExceptionalEigenpair {
  double b = 0.0;
  double lambda = 0.0;
  double coeff_k1 = 0.0;
  double coeff_k2 = 2.0;
  int k1 = 0, k2 = 0;
};

// Requires k1^2 != a k2^2 and a strictly positive exceptional value.
ExceptionalEigenpair exceptional_eigenpair(double a, int k1, int k2);

}  // namespace fracwave
