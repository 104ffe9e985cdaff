#pragma once

#include "params.hpp"

namespace fracwave {

// Characteristic functions whose zeros are the eigenvalues of the generator.
// Both are evaluated with the factor exp(-|Re r1| - |Re r2|) applied to every
// sinh/cosh product; positive scaling leaves the roots unchanged and keeps
// the evaluation finite for |lambda| up to ~1e3 and beyond. Residual
// tolerances elsewhere refer to the scaled functions.

// Equal wave speeds (a = 1):
//   f = 2 gamma (lambda+eta)^(alpha-1) sinh r1 sinh r2
//       + (r1/lambda) cosh r1 sinh r2 + (r2/lambda) sinh r1 cosh r2,
//   r1 = lambda (1 + i b/lambda)^(1/2), r2 = lambda (1 - i b/lambda)^(1/2).
complexd char_equal_speed(complexd lambda, const SystemParams& p);

// Distinct wave speeds (a != 1): det(M)/((a-1) lambda^3) with
//   det(M) = -a gamma lambda (lambda+eta)^(alpha-1) (r1^2-r2^2) sinh r1 sinh r2
//            - r1 (a r1^2 - lambda^2) cosh r1 sinh r2
//            + r2 (a r2^2 - lambda^2) sinh r1 cosh r2,
// r1, r2 from the dispersion biquadratic (principal branches throughout).
complexd char_general_speed(complexd lambda, const SystemParams& p);

// Dispatch on p.a.
complexd characteristic(complexd lambda, const SystemParams& p);

}  // namespace fracwave
