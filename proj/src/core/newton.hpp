#pragma once

#include <functional>

#include "params.hpp"

namespace fracwave {

// One refined characteristic root with its seed and convergence record.
struct EigenEstimate {
  complexd lambda;
  complexd seed;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct NewtonOptions {
  double tol = 1e-10;
  int max_iter = 60;
  double cell_radius = M_PI / 2.0;  // half the imaginary-axis root spacing
};

// Newton iteration with a central-difference derivative (step
// 1e-6*max(1,|lambda|); a complex step is not usable across the
// (lambda+eta)^(alpha-1) branch cut). Converged means the scaled residual
// is below tol AND the iterate stayed inside the seed's cell.
EigenEstimate refine_root(const std::function<complexd(complexd)>& evaluator,
                          complexd seed, const NewtonOptions& opt = {});

}  // namespace fracwave
