#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fracwave {

using complexd = std::complex<double>;

// Fractional damper parameters: order alpha in (0,1), tempering weight
// eta >= 0, damping gain gamma > 0.
struct FracParams {
  double alpha = 0.5;
  double eta = 0.0;
  double gamma = 1.0;

  void validate() const {
    if (!(alpha > 0.0) || !(alpha < 1.0))
      throw std::invalid_argument("alpha must lie in (0,1), got " +
                                  std::to_string(alpha));
    if (!(eta >= 0.0))
      throw std::invalid_argument("eta must be nonnegative");
    if (!(gamma > 0.0))
      throw std::invalid_argument("gamma must be positive");
  }

  // kappa(alpha) = sin(alpha pi)/pi, positive on (0,1)
  double kappa() const { return std::sin(alpha * M_PI) / M_PI; }
};

// Coupled system: wave-speed ratio a > 0, coupling constant b != 0.
struct SystemParams {
  double a = 1.0;
  double b = 1.0;
  FracParams frac;

  void validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
    if (b == 0.0) throw std::invalid_argument("b must be nonzero");
    frac.validate();
  }

  bool equal_speeds() const { return a == 1.0; }
};

inline double kappa_of(double alpha) { return std::sin(alpha * M_PI) / M_PI; }

// mu(xi) = |xi|^((2 alpha - 1)/2); grids never place a node at xi = 0.
inline double mu(double xi, double alpha) {
  return std::pow(std::abs(xi), 0.5 * (2.0 * alpha - 1.0));
}

}  // namespace fracwave
