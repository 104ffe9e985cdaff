#include "decay.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "asymptotics.hpp"
#include "fit.hpp"

namespace fracwave {

std::optional<std::pair<long, long>> rational_approx(double x, long max_den) {
  if (!(x > 0.0)) return std::nullopt;
  // Continued-fraction convergents until the denominator bound.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(v);
    const long a = static_cast<long>(fl);
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(x - double(p1) / double(q1)) <= 1e-9 * std::abs(x))
      return std::make_pair(p1, q1);
    const double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<double> predicted_exponent(const SystemParams& p) {
  p.validate();
  const double al = p.frac.alpha;
  if (p.a == 1.0) {
    return classify_b(p.b) == BCase::generic ? 2.0 / (1.0 - al)
                                             : 2.0 / (5.0 - al);
  }
  if (rational_approx(std::sqrt(p.a))) return 2.0 / (5.0 - al);
  if (auto frac = rational_approx(p.a)) {
    // a = p0/q0 in lowest terms with irrational sqrt(a): covered only for
    // small coupling, b^2 <= pi^2 |a-1| / (2 q0 (a+1)).
    const double q0 = static_cast<double>(frac->second);
    const double bound =
        M_PI * M_PI * std::abs(p.a - 1.0) / (2.0 * q0 * (p.a + 1.0));
    if (p.b * p.b <= bound) return 2.0 / (5.0 - al);
    return std::nullopt;
  }
  // No small-denominator structure detected: almost-all-irrational regime.
  return 2.0 / (5.0 - al);
}

DecayFit fit_decay_exponent(const EnergyTrace& trace, double t_lo,
                            double t_hi) {
  if (!(t_lo >= 0.0) || !(t_hi > t_lo))
    throw std::invalid_argument("bad fit window");
  // Window must span at least a factor 4 in t; [T/4, T] itself is legal.
  if (t_lo * 4.0 > t_hi * (1.0 + 1e-12))
    throw std::invalid_argument("fit window narrower than a factor 4 in t");
  std::vector<double> lt, le;
  for (size_t k = 0; k < trace.times.size(); ++k) {
    const double t = trace.times[k];
    if (t < t_lo || t > t_hi) continue;
    if (!(trace.energy[k] > 0.0))
      throw std::invalid_argument("nonpositive energy inside the fit window");
    if (!(t > 0.0)) continue;  // log t undefined at t = 0
    lt.push_back(std::log(t));
    le.push_back(std::log(trace.energy[k]));
  }
  if (lt.size() < 4)
    throw std::invalid_argument("fit window contains too few samples");
  const LineFit f = fit_line(lt, le);
  DecayFit out;
  out.exponent = -f.slope;
  out.stderr_ = f.slope_stderr;
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  out.r_squared = f.r_squared;
  return out;
}

namespace {

bool same_params(const SystemParams& x, const SystemParams& y) {
  return x.a == y.a && x.b == y.b && x.frac.alpha == y.frac.alpha &&
         x.frac.eta == y.frac.eta && x.frac.gamma == y.frac.gamma;
}

}  // namespace

SpectralEnergyReport spectral_vs_energy_report(const SystemParams& p,
                                               const AbscissaScan& scan,
                                               const DecayFit& fit,
                                               const SystemParams& fit_params) {
  SpectralEnergyReport r;
  r.params = p;
  r.predicted = predicted_exponent(p);
  r.abscissa_exponent = -scan.fitted_exponent;
  r.fit = fit;
  r.params_match = same_params(p, scan.params) && same_params(p, fit_params);
  r.pre_asymptotic = fit.r_squared < 0.98;
  if (r.predicted) {
    r.expected_abscissa = 2.0 / *r.predicted;
    r.consistent = r.params_match &&
                   std::abs(r.abscissa_exponent - r.expected_abscissa) <= 0.05;
  }
  return r;
}

}  // namespace fracwave
