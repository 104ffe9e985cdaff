#include "verify.hpp"

#include <cmath>
#include <sstream>

#include "characteristic.hpp"
#include "convolution.hpp"
#include "newton.hpp"
#include "simulate.hpp"
#include "stability.hpp"
#include "xi_grid.hpp"

namespace fracwave {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(const SystemParams& p,
                                          const VerifyOptions& opt) {
  p.validate();
  std::vector<CheckResult> out;
  const FracParams& fp = p.frac;

  // Transfer identity against the closed form, with the kappa hook applied.
  XiGrid grid;
  {
    CheckResult c{"transfer_identity"};
    try {
      grid = build_xi_grid(fp, 1.0, opt.grid_tol);
      const double err =
          transfer_sweep_error(grid, fp, 0.01, 100.0, 40, opt.kappa_scale);
      c.passed = err <= opt.grid_tol;
      c.detail = "worst relative error " + fmt(err) + " vs tol " +
                 fmt(opt.grid_tol);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(c);
  }

  // Conjugate symmetry of the transfer sum (real nodes and weights).
  {
    CheckResult c{"transfer_conjugate_symmetry"};
    double worst = 0.0;
    for (double mag : {0.3, 3.0, 300.0}) {
      const complexd lam{0.7 * mag, mag};
      const complexd d = diffusive_transfer(std::conj(lam), grid, fp) -
                         std::conj(diffusive_transfer(lam, grid, fp));
      worst = std::max(worst, std::abs(d));
    }
    c.passed = worst <= 1e-14;
    c.detail = "max |T(conj) - conj(T)| = " + fmt(worst);
    out.push_back(c);
  }

  // Caputo closed forms for t^m, eta = 0.
  {
    CheckResult c{"caputo_monomials"};
    const double dt = 1e-3;
    const size_t n = 3001;
    double worst = 0.0;
    FracParams q = fp;
    q.eta = 0.0;
    for (int m : {1, 2, 3}) {
      SampledSignal sig;
      sig.dt = dt;
      sig.values.resize(n);
      for (size_t k = 0; k < n; ++k) sig.values[k] = std::pow(k * dt, m);
      const auto got = caputo_direct(sig, q);
      const double pref =
          std::tgamma(m + 1.0) / std::tgamma(m + 1.0 - q.alpha);
      for (size_t k = 10; k < n; ++k) {
        const double exact = pref * std::pow(k * dt, m - q.alpha);
        worst = std::max(worst, std::abs(got.values[k] - exact) / exact);
      }
    }
    c.passed = worst <= 1e-3;
    c.detail = "worst relative error " + fmt(worst) + " (m = 1,2,3)";
    out.push_back(c);
  }

  // Composition identity: Caputo(alpha) equals the (1-alpha) fractional
  // integral of the sampled derivative.
  {
    CheckResult c{"caputo_integral_composition"};
    const double dt = 1e-3;
    const size_t n = 2001;
    SampledSignal sig;
    sig.dt = dt;
    sig.values.resize(n);
    for (size_t k = 0; k < n; ++k) {
      const double t = k * dt;
      sig.values[k] = t * std::sin(2.0 * M_PI * t);
    }
    const auto lhs = caputo_direct(sig, fp);
    SampledSignal dsig;
    dsig.dt = dt;
    dsig.values = sampled_derivative(sig.values, dt);
    FracParams q = fp;
    q.alpha = 1.0 - fp.alpha;
    const auto rhs = frac_integral_direct(dsig, q);
    double worst = 0.0, scale = 0.0;
    for (size_t k = 0; k < n; ++k) {
      worst = std::max(worst, std::abs(lhs.values[k] - rhs.values[k]));
      scale = std::max(scale, std::abs(lhs.values[k]));
    }
    c.passed = worst <= 10.0 * dt * dt * std::max(1.0, scale) + 1e-12;
    c.detail = "max deviation " + fmt(worst);
    out.push_back(c);
  }

  // Conjugate symmetry of the characteristic function.
  {
    CheckResult c{"characteristic_conjugate_symmetry"};
    double worst = 0.0;
    for (double t : {20.0, 63.0, 200.0}) {
      const complexd lam{-0.05, t};
      const complexd d = characteristic(std::conj(lam), p) -
                         std::conj(characteristic(lam, p));
      worst = std::max(worst, std::abs(d));
    }
    c.passed = worst <= 1e-12;
    c.detail = "max asymmetry " + fmt(worst);
    out.push_back(c);
  }

  // Exceptional pair (2,1): the characteristic determinant vanishes at the
  // undamped eigenvalue and Newton locks onto the imaginary axis.
  {
    CheckResult c{"exceptional_eigenpair"};
    try {
      // First admissible pair for this a ((2,1) when a = 1).
      ExceptionalEigenpair e;
      bool found = false;
      for (int k1 = 1; k1 <= 5 && !found; ++k1)
        for (int k2 = 1; k2 <= 5 && !found; ++k2) {
          try {
            e = exceptional_eigenpair(p.a, k1, k2);
            found = true;
          } catch (const std::invalid_argument&) {
          }
        }
      if (!found) throw std::runtime_error("no admissible (k1,k2) pair");
      SystemParams pe = p;
      pe.b = e.b;
      const complexd on = characteristic(complexd{0.0, e.lambda}, pe);
      const complexd off =
          characteristic(complexd{0.0, e.lambda * 1.001}, pe);
      const bool vanishes = std::abs(on) <= 1e-8 * std::max(1.0, std::abs(off));
      const auto est = refine_root(
          [&pe](complexd z) { return characteristic(z, pe); },
          complexd{0.0, e.lambda}, {});
      c.passed = vanishes && est.converged &&
                 std::abs(est.lambda.real()) <= 1e-9;
      c.detail = "|char(i lambda)| = " + fmt(std::abs(on)) +
                 ", refined |Re| = " + fmt(std::abs(est.lambda.real()));
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(c);
  }

  // Resolvent boundary coefficients: positive, and at eta = 0 the lambda = 0
  // evaluation is skipped (0 belongs to the spectrum there).
  {
    CheckResult c{"resolvent_coefficients"};
    if (fp.eta == 0.0) {
      c.skipped = true;
      c.passed = true;
      c.detail =
          "eta = 0: zero frequency lies in the spectrum; lambda = 0 "
          "coefficient checks skipped";
    } else {
      bool ok = true;
      for (double lam : {0.0, 1.0, 50.0}) {
        const auto [c1, c2] = c1_c2(lam, fp, grid);
        ok = ok && c1 > 0.0 && c2 > 0.0;
      }
      c.passed = ok;
      c.detail = ok ? "c1, c2 > 0 at lambda in {0, 1, 50}" : "nonpositive coefficient";
    }
    out.push_back(c);
  }

  // Energy balance on a short run: monotone energy, and the conservative
  // limit gamma = 0 holds energy to 1e-10 over a unit time.
  {
    CheckResult c{"energy_balance"};
    try {
      SystemParams ps = p;
      SpatialGrid sg(64);
      XiGrid xg = build_xi_grid(fp, M_PI * sg.n_cells, 1e-6,
                                XiGridOptions{.sweep_points = 20});
      Simulator sim(ps, sg, xg);
      const auto trace = sim.run("smooth_mix", sg.h() / 2.0, 1.0);
      bool mono = true;
      for (size_t k = 1; k < trace.energy.size(); ++k)
        if (trace.energy[k] >
            trace.energy[k - 1] + 1e-12 * trace.energy.front())
          mono = false;
      SystemParams pc = ps;
      pc.frac.gamma = 0.0;
      Simulator simc(pc, sg, xg);
      const auto tc = simc.run("u_three_half_sine", sg.h() / 2.0, 1.0);
      const double drift =
          std::abs(tc.energy.back() - tc.energy.front()) / tc.energy.front();
      c.passed = mono && drift <= 1e-10;
      c.detail = std::string(mono ? "monotone" : "NOT monotone") +
                 ", gamma=0 drift " + fmt(drift);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.push_back(c);
  }

  return out;
}

}  // namespace fracwave
