#pragma once

#include <vector>

#include "params.hpp"

namespace fracwave {

// Real signal sampled on the uniform grid t_k = k*dt, k = 0..n-1.
struct SampledSignal {
  double dt = 0.0;
  std::vector<double> values;

  SampledSignal() = default;
  SampledSignal(double dt_, std::vector<double> v);
  // From explicit times; rejects non-uniform grids or t[0] != 0.
  SampledSignal(const std::vector<double>& times, std::vector<double> v);

  size_t size() const { return values.size(); }
  double time(size_t k) const { return dt * static_cast<double>(k); }
};

// Tempered Caputo derivative of order alpha:
//   (1/Gamma(1-alpha)) int_0^t (t-s)^(-alpha) e^(-eta(t-s)) w'(s) ds,
// with w' from sampled differences and the singular kernel handled by
// product integration (exact on piecewise-quadratic w', so monomials
// through t^3 are reproduced to rounding).
SampledSignal caputo_direct(const SampledSignal& signal, const FracParams& p);

// Tempered fractional integral of order alpha:
//   int_0^t (t-s)^(alpha-1) e^(-eta(t-s)) w(s) ds / Gamma(alpha).
SampledSignal frac_integral_direct(const SampledSignal& signal,
                                   const FracParams& p);

// Sampled derivative: fourth-order differences (one-sided near the ends),
// second-order on signals too short for the wide stencil.
std::vector<double> sampled_derivative(const std::vector<double>& v, double dt);

}  // namespace fracwave
