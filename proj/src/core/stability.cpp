#include "stability.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace {

double exceptional_b_squared(double a, double k1, double k2) {
  return (k1 * k1 - a * k2 * k2) * (a * k1 * k1 - k2 * k2) * M_PI * M_PI /
         ((a + 1.0) * (k1 * k1 + k2 * k2));
}

double undamped_frequency(double a, double k1, double k2) {
  return M_PI * std::sqrt(a * (k1 * k1 + k2 * k2) / (a + 1.0));
}

}  // namespace

ScWitness sc_check(const SystemParams& p, int k_max) {
  p.validate();
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const double b2 = p.b * p.b;
  // The exceptional value is symmetric under swapping (k1,k2); scanning
  // k2 <= k1 reports the canonical representative.
  for (int k1 = 1; k1 <= k_max; ++k1) {
    for (int k2 = 1; k2 <= k1; ++k2) {
      const double v = exceptional_b_squared(p.a, k1, k2);
      if (v <= 0.0) continue;
      if (std::abs(v - b2) <= 1e-9 * std::max(v, b2)) {
        ScWitness w;
        w.violated = true;
        w.k1 = k1;
        w.k2 = k2;
        w.b_exceptional = std::sqrt(v);
        w.lambda_imag = undamped_frequency(p.a, k1, k2);
        return w;
      }
    }
  }
  return {};
}

ExceptionalEigenpair exceptional_eigenpair(double a, int k1, int k2) {
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("k1, k2 must be nonzero");
  const double K1 = k1, K2 = k2;
  if (K1 * K1 == a * K2 * K2)
    throw std::invalid_argument("pair rejected: k1^2 = a k2^2");
  const double v = exceptional_b_squared(a, K1, K2);
  if (!(v > 0.0))
    throw std::invalid_argument("pair rejected: exceptional value not positive");
  ExceptionalEigenpair e;
  e.k1 = k1;
  e.k2 = k2;
  e.b = std::sqrt(v);
  e.lambda = undamped_frequency(a, K1, K2);
  e.coeff_k1 = 2.0 * K2 * (a * K1 * K1 - K2 * K2) / (K1 * (K1 * K1 - a * K2 * K2));
  e.coeff_k2 = 2.0;
  return e;
}

}  // namespace fracwave
