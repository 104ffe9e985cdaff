#include "newton.hpp"

#include <cmath>

namespace fracwave {

EigenEstimate refine_root(const std::function<complexd(complexd)>& evaluator,
                          complexd seed, const NewtonOptions& opt) {
  EigenEstimate est;
  est.seed = seed;
  complexd lam = seed;
  for (int it = 0; it <= opt.max_iter; ++it) {
    const complexd fv = evaluator(lam);
    est.lambda = lam;
    est.residual = std::abs(fv);
    est.iterations = it;
    if (est.residual <= opt.tol) {
      est.converged = std::abs(lam - seed) < opt.cell_radius;
      return est;
    }
    if (it == opt.max_iter) break;
    const double h = 1e-6 * std::max(1.0, std::abs(lam));
    const complexd deriv = (evaluator(lam + h) - evaluator(lam - h)) / (2.0 * h);
    if (deriv == complexd{0.0, 0.0}) break;
    lam -= fv / deriv;
    if (std::abs(lam - seed) > 2.0 * opt.cell_radius) break;  // left the cell
  }
  est.converged = false;
  return est;
}

}  // namespace fracwave
