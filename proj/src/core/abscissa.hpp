#pragma once

#include <vector>

#include "asymptotics.hpp"
#include "newton.hpp"
#include "params.hpp"

namespace fracwave {

// Refined roots of one branch over an index range plus the power-law fit of
// |Re lambda_n| against n. The scan aborts if any refinement fails or fewer
// than 6 roots converge.
struct AbscissaScan {
  SystemParams params;
  int branch = 1;
  std::vector<long> indices;
  std::vector<EigenEstimate> roots;
  double fitted_exponent = 0.0;  // slope of log|Re lambda| vs log n
  double fit_stderr = 0.0;
};

AbscissaScan abscissa_scan(const SystemParams& p, int branch, long n_lo,
                           long n_hi, const NewtonOptions& opt = {});

// Fit alone, for synthetic inputs: slope of log|re_values| vs log n.
double abscissa_fit(const std::vector<long>& n,
                    const std::vector<double>& re_values);

}  // namespace fracwave
