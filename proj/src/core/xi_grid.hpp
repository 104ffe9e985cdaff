#pragma once

#include <complex>
#include <vector>

#include "params.hpp"

namespace fracwave {

// Quadrature discretization of the diffusive variable xi in R. Nodes are
// placed on the positive half-line (even symmetry is folded into the
// weights), strictly excluding xi = 0 where mu is singular for alpha < 1/2.
struct XiGrid {
  std::vector<double> nodes;    // strictly increasing, all > 0
  std::vector<double> weights;  // all > 0
  double lambda_ref = 1.0;
  double target_tol = 1e-8;
  double achieved_err = 0.0;  // worst relative error on the verification sweep

  size_t size() const { return nodes.size(); }
};

struct XiGridOptions {
  double sweep_lo = 0.0;  // 0 -> lambda_ref/100
  double sweep_hi = 0.0;  // 0 -> 100*lambda_ref
  int node_cap = 4096;
  int sweep_points = 40;
};

// Build a grid whose transfer evaluation matches (lambda+eta)^(alpha-1) to
// target_tol over the sweep band (real and imaginary axes), refining the
// panel layout until the verification sweep passes. Throws
// std::invalid_argument on bad inputs and std::runtime_error when the node
// cap is exceeded first.
XiGrid build_xi_grid(const FracParams& p, double lambda_ref, double target_tol,
                     const XiGridOptions& opt = {});

// kappa(alpha) sum_j w_j mu(xi_j)^2 / (lambda + xi_j^2 + eta).
// Equals (lambda+eta)^(alpha-1) (principal branch) up to the grid tolerance.
complexd diffusive_transfer(complexd lambda, const XiGrid& g,
                            const FracParams& p);

// Worst relative error of the transfer identity over the sweep band.
double transfer_sweep_error(const XiGrid& g, const FracParams& p,
                            double sweep_lo, double sweep_hi, int points = 40,
                            double kappa_scale = 1.0);

// Boundary-condition coefficients of the resolvent problem:
//   c1 = gamma kappa(alpha) sum w mu^2 / (lambda^2 + (xi^2+eta)^2)
//   c2 = gamma kappa(alpha) sum w mu^2 (xi^2+eta) / (lambda^2 + (xi^2+eta)^2)
// Requires eta > 0 or lambda != 0. Both outputs are strictly positive.
std::pair<double, double> c1_c2(double lambda, const FracParams& p,
                                const XiGrid& g);

struct AIntegrals {
  double a1;  // quadrature of |xi|^(alpha+1/2)/(|lambda|+xi^2+eta)^2 over R
  double a2;  // closed form sqrt(pi/2) (|lambda|+eta)^(-3/4)
  double a3;  // closed form sqrt(pi)/4 (|lambda|+eta)^(-5/4)
};

AIntegrals a_integrals(double lambda_abs, const FracParams& p, const XiGrid& g);

}  // namespace fracwave
