#include "abscissa.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "characteristic.hpp"
#include "fit.hpp"

namespace fracwave {

AbscissaScan abscissa_scan(const SystemParams& p, int branch, long n_lo,
                           long n_hi, const NewtonOptions& opt) {
  p.validate();
  if (n_lo > n_hi) throw std::invalid_argument("empty index range");
  if (n_lo < kMinAsymptoticIndex)
    throw std::invalid_argument("n_lo below the asymptotic regime");
  AbscissaScan scan;
  scan.params = p;
  scan.branch = branch;
  auto eval = [&p](complexd z) { return characteristic(z, p); };
  std::string failures;
  for (long n = n_lo; n <= n_hi; ++n) {
    const complexd seed = asymptotic_root(branch, n, p);
    EigenEstimate est = refine_root(eval, seed, opt);
    if (!est.converged) {
      failures += (failures.empty() ? "n=" : ", n=") + std::to_string(n);
      continue;
    }
    scan.indices.push_back(n);
    scan.roots.push_back(est);
  }
  if (!failures.empty())
    throw std::runtime_error("root refinement failed at " + failures);
  if (scan.roots.size() < 6)
    throw std::runtime_error("fewer than 6 converged roots");
  std::vector<double> re(scan.roots.size());
  for (size_t i = 0; i < scan.roots.size(); ++i)
    re[i] = scan.roots[i].lambda.real();
  scan.fitted_exponent = abscissa_fit(scan.indices, re);
  std::vector<double> nd(scan.indices.begin(), scan.indices.end());
  std::vector<double> mag(re.size());
  for (size_t i = 0; i < re.size(); ++i) mag[i] = std::abs(re[i]);
  scan.fit_stderr = fit_power_law(nd, mag).slope_stderr;
  return scan;
}

double abscissa_fit(const std::vector<long>& n,
                    const std::vector<double>& re_values) {
  if (n.size() != re_values.size() || n.size() < 2)
    throw std::invalid_argument("abscissa_fit needs matched samples");
  std::vector<double> nd(n.size()), mag(n.size());
  for (size_t i = 0; i < n.size(); ++i) {
    nd[i] = static_cast<double>(n[i]);
    mag[i] = std::abs(re_values[i]);
  }
  return fit_power_law(nd, mag).slope;
}

}  // namespace fracwave
