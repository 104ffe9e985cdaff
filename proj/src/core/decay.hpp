#pragma once

#include <optional>
#include <string>

#include "abscissa.hpp"
#include "params.hpp"
#include "simulate.hpp"

namespace fracwave {

// Predicted polynomial decay exponent s(alpha).
//   a = 1:  2/(1-alpha) when b is not a pi multiple, else 2/(5-alpha).
//   a != 1: 2/(5-alpha) when sqrt(a) is rational, when a is rational with
//           irrational sqrt(a) and b small enough (b^2 <= pi^2|a-1|/
//           (2 q0 (a+1)) for a = p0/q0 in lowest terms), and in the
//           almost-all irrational regime. Unset outside those cases.
std::optional<double> predicted_exponent(const SystemParams& p);

// Rational detection used by the a != 1 cases: best p/q with q <= max_den
// within 1e-9 relative.
std::optional<std::pair<long, long>> rational_approx(double x,
                                                     long max_den = 64);

struct DecayFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
  double t_lo = 0.0, t_hi = 0.0;
  double r_squared = 0.0;
};

// OLS of log E against log t on [t_lo, t_hi]; the exponent is the negated
// slope. Rejects windows narrower than a factor 4 in t and windows with
// nonpositive energy.
DecayFit fit_decay_exponent(const EnergyTrace& trace, double t_lo, double t_hi);

// Consistency report tying the spectral abscissa scaling |Re lambda_n| ~
// n^(-l) to the predicted decay t^(-2/l) and to the time-domain fit.
struct SpectralEnergyReport {
  SystemParams params;
  std::optional<double> predicted;       // s(alpha)
  double abscissa_exponent = 0.0;        // -slope of the scan
  double expected_abscissa = 0.0;        // 2/predicted when defined
  DecayFit fit;
  bool params_match = true;
  bool consistent = false;               // |abscissa - 2/predicted| <= 0.05
  bool pre_asymptotic = false;           // fit window flagged: r^2 < 0.98
};

SpectralEnergyReport spectral_vs_energy_report(const SystemParams& p,
                                               const AbscissaScan& scan,
                                               const DecayFit& fit,
                                               const SystemParams& fit_params);

}  // namespace fracwave
