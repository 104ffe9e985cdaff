#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace fracwave {

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on the
// Legendre recurrence. Order is small here (<= 24), no caching needed.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    int order) {
  std::vector<double> x(order), w(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[order - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace fracwave
