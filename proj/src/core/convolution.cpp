#include "convolution.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace fracwave {

SampledSignal::SampledSignal(double dt_, std::vector<double> v)
    : dt(dt_), values(std::move(v)) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
}

SampledSignal::SampledSignal(const std::vector<double>& times,
                             std::vector<double> v)
    : values(std::move(v)) {
  if (times.size() != values.size())
    throw std::invalid_argument("times/values length mismatch");
  if (times.size() < 2) throw std::invalid_argument("need at least 2 samples");
  if (std::abs(times[0]) > 1e-14)
    throw std::invalid_argument("time grid must start at 0");
  dt = times[1] - times[0];
  if (!(dt > 0.0)) throw std::invalid_argument("time grid must increase");
  for (size_t k = 1; k + 1 < times.size(); ++k) {
    const double step = times[k + 1] - times[k];
    if (std::abs(step - dt) > 1e-12 * std::max(dt, step))
      throw std::invalid_argument("time grid must be uniform");
  }
}

std::vector<double> sampled_derivative(const std::vector<double>& v,
                                       double dt) {
  const size_t n = v.size();
  if (n < 3) throw std::invalid_argument("need at least 3 samples");
  std::vector<double> d(n);
  if (n < 5) {
    // short signals: second-order differences
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
    for (size_t k = 1; k + 1 < n; ++k)
      d[k] = (v[k + 1] - v[k - 1]) / (2.0 * dt);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
    return d;
  }
  // fourth-order differences (exact through quartics); the convolution's
  // relative accuracy near t ~ 10 dt is limited by the derivative error,
  // so second order is not enough there.
  const double c = 1.0 / (12.0 * dt);
  d[0] = c * (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] -
              3.0 * v[4]);
  d[1] = c * (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]);
  for (size_t k = 2; k + 2 < n; ++k)
    d[k] = c * (-v[k + 2] + 8.0 * v[k + 1] - 8.0 * v[k - 1] + v[k - 2]);
  d[n - 2] = -c * (-3.0 * v[n - 1] - 10.0 * v[n - 2] + 18.0 * v[n - 3] -
                   6.0 * v[n - 4] + v[n - 5]);
  d[n - 1] = -c * (-25.0 * v[n - 1] + 48.0 * v[n - 2] - 36.0 * v[n - 3] +
                   16.0 * v[n - 4] - 3.0 * v[n - 5]);
  return d;
}

namespace {

// Kernel moments over tau in [(d-1)dt, d dt] for d = 1..count:
//   m0[d-1] = int tau^beta     e^(-eta tau) dtau
//   m1[d-1] = int tau^(beta+1) e^(-eta tau) dtau
//   m2[d-1] = int tau^(beta+2) e^(-eta tau) dtau
// For eta > 0 these are lower-incomplete-gamma differences.
struct Moments {
  std::vector<double> m0, m1, m2;
};

Moments kernel_moments(double beta, double eta, double dt, size_t count) {
  Moments m;
  m.m0.resize(count);
  m.m1.resize(count);
  m.m2.resize(count);
  const double a0 = beta + 1.0, a1 = beta + 2.0, a2 = beta + 3.0;
  if (eta == 0.0) {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;
    for (size_t d = 1; d <= count; ++d) {
      const double t1 = d * dt;
      const double q0 = std::pow(t1, a0) / a0;
      const double q1 = std::pow(t1, a1) / a1;
      const double q2 = std::pow(t1, a2) / a2;
      m.m0[d - 1] = q0 - p0;
      m.m1[d - 1] = q1 - p1;
      m.m2[d - 1] = q2 - p2;
      p0 = q0;
      p1 = q1;
      p2 = q2;
    }
    return m;
  }
  const double s0 = std::pow(eta, -a0), s1 = std::pow(eta, -a1),
               s2 = std::pow(eta, -a2);
  double g0 = 0.0, g1 = 0.0, g2 = 0.0;
  for (size_t d = 1; d <= count; ++d) {
    const double x = eta * d * dt;
    const double h0 = boost::math::tgamma_lower(a0, x);
    const double h1 = boost::math::tgamma_lower(a1, x);
    const double h2 = boost::math::tgamma_lower(a2, x);
    m.m0[d - 1] = (h0 - g0) * s0;
    m.m1[d - 1] = (h1 - g1) * s1;
    m.m2[d - 1] = (h2 - g2) * s2;
    g0 = h0;
    g1 = h1;
    g2 = h2;
  }
  return m;
}

// out_k = pref * int_0^{t_k} (t_k - s)^beta e^(-eta (t_k - s)) g(s) ds with g
// reconstructed piecewise-quadratically through the samples (exact for
// quadratic g, so the monomial oracles up to t^3 are reproduced exactly).
// Uniform grid: the interval weights depend on d = k - j only.
std::vector<double> convolve_piecewise_quadratic(const std::vector<double>& g,
                                                 double beta, double eta,
                                                 double dt, double pref) {
  const size_t n = g.size();
  if (n < 3) throw std::invalid_argument("need at least 3 samples");
  const Moments m = kernel_moments(beta, eta, dt, n - 1);
  // On [t_j, t_{j+1}] with u = (s - t_j)/dt and tau = t_k - s:
  // u = d - tau/dt, so the u-moments over the interval are
  //   P0 = m0, P1 = d m0 - m1/dt, P2 = d^2 m0 - 2 d m1/dt + m2/dt^2.
  // Central stencil (j >= 1), g(u) = g_j + u (g_{j+1}-g_{j-1})/2
  //                                 + u^2 (g_{j+1}-2g_j+g_{j-1})/2:
  //   w_prev = (P2 - P1)/2, w_mid = P0 - P2, w_next = (P1 + P2)/2.
  // Forward stencil (j = 0) through (g_0, g_1, g_2):
  //   w0 = P0 - 3P1/2 + P2/2, w1 = 2P1 - P2, w2 = (P2 - P1)/2.
  std::vector<double> wp(n - 1), wm(n - 1), wn(n - 1);
  std::vector<double> f0(n - 1), f1(n - 1), f2(n - 1);
  for (size_t d = 1; d < n; ++d) {
    const double P0 = m.m0[d - 1];
    const double P1 = d * m.m0[d - 1] - m.m1[d - 1] / dt;
    const double P2 = double(d) * d * m.m0[d - 1] -
                      2.0 * d * m.m1[d - 1] / dt + m.m2[d - 1] / (dt * dt);
    wp[d - 1] = 0.5 * (P2 - P1);
    wm[d - 1] = P0 - P2;
    wn[d - 1] = 0.5 * (P1 + P2);
    f0[d - 1] = P0 - 1.5 * P1 + 0.5 * P2;
    f1[d - 1] = 2.0 * P1 - P2;
    f2[d - 1] = 0.5 * (P2 - P1);
  }
  std::vector<double> out(n, 0.0);
  for (size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (size_t d = 1; d < k; ++d) {  // intervals with j = k - d >= 1
      const size_t j = k - d;
      acc += wp[d - 1] * g[j - 1] + wm[d - 1] * g[j] + wn[d - 1] * g[j + 1];
    }
    // first interval j = 0 (d = k)
    acc += f0[k - 1] * g[0] + f1[k - 1] * g[1] + f2[k - 1] * g[2];
    out[k] = pref * acc;
  }
  return out;
}

}  // namespace

SampledSignal caputo_direct(const SampledSignal& signal, const FracParams& p) {
  p.validate();
  if (signal.size() < 3) throw std::invalid_argument("signal too short");
  const auto dw = sampled_derivative(signal.values, signal.dt);
  SampledSignal out;
  out.dt = signal.dt;
  out.values = convolve_piecewise_quadratic(
      dw, -p.alpha, p.eta, signal.dt, 1.0 / std::tgamma(1.0 - p.alpha));
  return out;
}

SampledSignal frac_integral_direct(const SampledSignal& signal,
                                   const FracParams& p) {
  p.validate();
  if (signal.size() < 3) throw std::invalid_argument("signal too short");
  SampledSignal out;
  out.dt = signal.dt;
  out.values =
      convolve_piecewise_quadratic(signal.values, p.alpha - 1.0, p.eta,
                                   signal.dt, 1.0 / std::tgamma(p.alpha));
  return out;
}

}  // namespace fracwave
