#include "xi_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gauss.hpp"

namespace fracwave {

namespace {

// Panel layout in the substituted variable y = 1 + xi^2/s, s = 1 + eta:
// geometric panels in delta = y - 1 between [dmin, dmax], Gauss-Legendre
// nodes per panel mapped back to xi = sqrt(s*delta) with weight
// W * sqrt(s)/sqrt(delta). The head cutoff dmin is sized so the omitted
// [0, xi_min) mass stays below tol at the small-|lambda| end of the band;
// the tail cutoff so the omitted Lorentzian tail stays below tol at the
// large-|lambda| end, where (lambda+eta)^(alpha-1) is smallest.
XiGrid assemble(const FracParams& p, double lambda_ref, double tol,
                double sweep_lo, double sweep_hi, double ratio, int order,
                double margin) {
  const double s = 1.0 + p.eta;
  const double kap = p.kappa();
  const double m_lo = sweep_lo + p.eta;
  const double m_hi = sweep_hi + p.eta;

  double dmin = std::pow(tol / margin * p.alpha * std::pow(m_lo, p.alpha) / kap,
                         1.0 / p.alpha) *
                m_lo / s;
  const double xi_max =
      std::pow(2.0 * margin * kap * std::pow(m_hi, 1.0 - p.alpha) /
                   ((1.0 - p.alpha) * tol),
               1.0 / (2.0 - 2.0 * p.alpha));
  const double dmax = xi_max * xi_max / s;

  auto [gx, gw] = gauss_legendre(order);
  XiGrid g;
  g.lambda_ref = lambda_ref;
  g.target_tol = tol;
  double d0 = dmin;
  while (d0 < dmax) {
    double d1 = std::min(d0 * ratio, dmax);
    const double mid = 0.5 * (d1 + d0), half = 0.5 * (d1 - d0);
    for (int q = 0; q < order; ++q) {
      const double delta = mid + half * gx[q];
      g.nodes.push_back(std::sqrt(s * delta));
      g.weights.push_back(gw[q] * half * std::sqrt(s / delta));
    }
    d0 = d1;
  }
  return g;
}

}  // namespace

complexd diffusive_transfer(complexd lambda, const XiGrid& g,
                            const FracParams& p) {
  const double e = p.alpha - 0.5;  // mu(xi)^2 = xi^(2 alpha - 1)
  complexd acc{0.0, 0.0};
  for (size_t j = 0; j < g.nodes.size(); ++j) {
    const double xi = g.nodes[j];
    const complexd den = lambda + xi * xi + p.eta;
    if (den == complexd{0.0, 0.0})
      throw std::invalid_argument("lambda + xi^2 + eta vanishes on a node");
    acc += g.weights[j] * std::pow(xi * xi, e) / den;
  }
  return p.kappa() * acc;
}

double transfer_sweep_error(const XiGrid& g, const FracParams& p,
                            double sweep_lo, double sweep_hi, int points,
                            double kappa_scale) {
  double worst = 0.0;
  const double lr = std::log(sweep_hi / sweep_lo);
  for (int i = 0; i < points; ++i) {
    const double mag = sweep_lo * std::exp(lr * i / (points - 1.0));
    for (const complexd lam : {complexd{mag, 0.0}, complexd{0.0, mag}}) {
      const complexd exact = std::pow(lam + p.eta, p.alpha - 1.0);
      const complexd got = kappa_scale * diffusive_transfer(lam, g, p);
      worst = std::max(worst, std::abs(got - exact) / std::abs(exact));
    }
  }
  return worst;
}

XiGrid build_xi_grid(const FracParams& p, double lambda_ref, double target_tol,
                     const XiGridOptions& opt) {
  p.validate();
  if (!(lambda_ref > 0.0))
    throw std::invalid_argument("lambda_ref must be positive");
  if (!(target_tol > 1e-12) || !(target_tol < 1e-2))
    throw std::invalid_argument("target_tol must lie in (1e-12, 1e-2)");
  const double lo = opt.sweep_lo > 0.0 ? opt.sweep_lo : lambda_ref / 100.0;
  const double hi = opt.sweep_hi > 0.0 ? opt.sweep_hi : lambda_ref * 100.0;
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("sweep band must satisfy 0 < lo < hi");

  // Refinement ladder: widen cutoffs and upgrade panel resolution until the
  // verification sweep passes or the node cap is hit.
  double ratio = 4.0;
  int order = 10;
  double margin = 50.0;
  for (int level = 0; level < 8; ++level) {
    XiGrid g = assemble(p, lambda_ref, target_tol, lo, hi, ratio, order, margin);
    if (static_cast<int>(g.size()) > opt.node_cap)
      throw std::runtime_error(
          "xi grid node cap (" + std::to_string(opt.node_cap) +
          ") exceeded before reaching tolerance " + std::to_string(target_tol));
    g.achieved_err = transfer_sweep_error(g, p, lo, hi, opt.sweep_points);
    if (g.achieved_err <= target_tol) return g;
    margin *= 10.0;
    if (level % 2 == 1) order += 4;
    else ratio = std::max(2.0, ratio / 2.0);
  }
  throw std::runtime_error("xi grid failed to reach tolerance " +
                           std::to_string(target_tol));
}

std::pair<double, double> c1_c2(double lambda, const FracParams& p,
                                const XiGrid& g) {
  if (p.eta == 0.0 && lambda == 0.0)
    throw std::invalid_argument("c1/c2 need eta > 0 or lambda != 0");
  const double e = p.alpha - 0.5;
  double s1 = 0.0, s2 = 0.0;
  for (size_t j = 0; j < g.nodes.size(); ++j) {
    const double xi2e = g.nodes[j] * g.nodes[j] + p.eta;
    const double den = lambda * lambda + xi2e * xi2e;
    const double mu2 = std::pow(g.nodes[j] * g.nodes[j], e);
    s1 += g.weights[j] * mu2 / den;
    s2 += g.weights[j] * mu2 * xi2e / den;
  }
  const double c = p.gamma * p.kappa();
  return {c * s1, c * s2};
}

AIntegrals a_integrals(double lambda_abs, const FracParams& p,
                       const XiGrid& g) {
  if (!(lambda_abs > 0.0))
    throw std::invalid_argument("a_integrals needs |lambda| > 0");
  const double m = lambda_abs + p.eta;
  AIntegrals out;
  out.a2 = std::sqrt(M_PI / 2.0) * std::pow(m, -0.75);
  out.a3 = 0.25 * std::sqrt(M_PI) * std::pow(m, -1.25);
  double a1 = 0.0;  // integrand |xi|^(alpha+1/2) / (m + xi^2)^2, even in xi
  for (size_t j = 0; j < g.nodes.size(); ++j) {
    const double xi = g.nodes[j];
    const double den = m + xi * xi;
    a1 += g.weights[j] * std::pow(xi, p.alpha + 0.5) / (den * den);
  }
  out.a1 = a1;
  return out;
}

}  // namespace fracwave
