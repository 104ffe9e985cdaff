#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fracwave {

// Ordinary least squares y = slope*x + intercept with slope stderr and R^2.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 1.0;
};

inline LineFit fit_line(const std::vector<double>& x,
                        const std::vector<double>& y) {
  const size_t n = x.size();
  if (n != y.size() || n < 2)
    throw std::invalid_argument("fit_line needs >= 2 matched samples");
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    sse += r * r;
  }
  f.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  f.slope_stderr = n > 2 ? std::sqrt(sse / ((n - 2) * sxx)) : 0.0;
  return f;
}

// Fit y = C * x^p on log-log axes; returns the fit of log y vs log x.
inline LineFit fit_power_law(const std::vector<double>& x,
                             const std::vector<double>& y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("power-law fit needs positive samples");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

}  // namespace fracwave
