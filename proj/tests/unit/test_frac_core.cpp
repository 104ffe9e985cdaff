#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "core/convolution.hpp"
#include "core/params.hpp"
#include "core/xi_grid.hpp"

using namespace fracwave;

namespace {

// Adaptive Simpson on [a,b]; independent oracle for convolution checks.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int depth = 24) {
  auto simpson = [&f](double x0, double x2) {
    const double x1 = 0.5 * (x0 + x2);
    return (x2 - x0) / 6.0 * (f(x0) + 4.0 * f(x1) + f(x2));
  };
  std::function<double(double, double, double, int)> rec =
      [&](double x0, double x2, double whole, int d) -> double {
    const double x1 = 0.5 * (x0 + x2);
    const double left = simpson(x0, x1), right = simpson(x1, x2);
    if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
      return left + right + (left + right - whole) / 15.0;
    return rec(x0, x1, left, d - 1) + rec(x1, x2, right, d - 1);
  };
  return rec(a, b, simpson(a, b), depth);
}

}  // namespace

TEST_CASE("mu evaluations") {
  CHECK(mu(1.0, 0.3) == doctest::Approx(1.0));
  CHECK(mu(1.0, 0.9) == doctest::Approx(1.0));
  CHECK(mu(7.3, 0.5) == doctest::Approx(1.0));   // exponent vanishes
  CHECK(mu(-7.3, 0.5) == doctest::Approx(1.0));  // even in xi
  CHECK(mu(4.0, 0.75) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(mu(-4.0, 0.75) == doctest::Approx(mu(4.0, 0.75)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((FracParams{1.5, 0.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FracParams{0.0, 0.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FracParams{0.5, -1.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FracParams{0.5, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{-1.0, 1.0, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SystemParams{1.0, 0.0, {}}.validate()), std::invalid_argument);
  CHECK_NOTHROW((SystemParams{4.0, 1.0, {0.5, 1.0, 1.0}}.validate()));
}

TEST_CASE("xi grid reproduces the transfer identity") {
  FracParams p{0.5, 1.0, 1.0};
  const XiGrid g = build_xi_grid(p, 1.0, 1e-6);
  CHECK(g.size() >= 8);
  CHECK(g.achieved_err <= 1e-6);
  for (double w : g.weights) CHECK(w > 0.0);
  // independent re-check of the sweep
  CHECK(transfer_sweep_error(g, p, 0.01, 100.0) <= 1e-6);

  SUBCASE("pointwise closed forms") {
    FracParams q{0.3, 0.0, 1.0};
    const XiGrid g0 = build_xi_grid(q, 1.0, 1e-8);
    // lambda = 1, eta = 0: 1^(alpha-1) = 1 for any alpha
    CHECK(std::abs(diffusive_transfer({1.0, 0.0}, g0, q) - complexd{1.0, 0.0}) <
          1e-8);
    const complexd v = diffusive_transfer({3.0, 0.0}, g, p);
    CHECK(std::abs(v - complexd{0.5, 0.0}) < 1e-6);  // (3+1)^(-1/2)
    FracParams r{0.3, 1.0, 1.0};
    const XiGrid gr = build_xi_grid(r, 10.0, 1e-7);
    const complexd lam{0.0, 100.0};
    const complexd closed = std::pow(lam + 1.0, -0.7);
    CHECK(std::abs(diffusive_transfer(lam, gr, r) - closed) <
          1e-7 * std::abs(closed));
  }
}

TEST_CASE("near-singular order needs more nodes but still passes") {
  const XiGrid g_half = build_xi_grid({0.5, 1.0, 1.0}, 1.0, 1e-6);
  const XiGrid g_low = build_xi_grid({0.1, 1.0, 1.0}, 1.0, 1e-6);
  CHECK(g_low.achieved_err <= 1e-6);
  CHECK(g_low.size() > g_half.size());
}

TEST_CASE("grid construction failure modes") {
  // Tolerance outside the supported range.
  CHECK_THROWS(build_xi_grid({0.5, 1.0, 1.0}, 1.0, 1e-15));
  // Reachable tolerance but an absurd node cap.
  XiGridOptions opt;
  opt.node_cap = 32;
  CHECK_THROWS_AS(build_xi_grid({0.5, 1.0, 1.0}, 1.0, 1e-8, opt),
                  std::runtime_error);
  CHECK_THROWS(build_xi_grid({0.5, 1.0, 1.0}, -1.0, 1e-6));
}

TEST_CASE("transfer conjugate symmetry is exact") {
  FracParams p{0.7, 1.0, 1.0};
  const XiGrid g = build_xi_grid(p, 1.0, 1e-8);
  for (const complexd lam : {complexd{2.0, 37.0}, complexd{-0.5, 93.0}}) {
    const complexd d = diffusive_transfer(std::conj(lam), g, p) -
                       std::conj(diffusive_transfer(lam, g, p));
    CHECK(std::abs(d) == 0.0);
  }
}

TEST_CASE("c1/c2 positivity and algebraic identity with the transfer") {
  FracParams p{0.5, 1.0, 1.0};
  const XiGrid g = build_xi_grid(p, 1.0, 1e-8);
  const auto [c1, c2] = c1_c2(1.0, p, g);
  CHECK(c1 > 0.0);
  CHECK(c2 > 0.0);

  // gamma * transfer(i lambda) = c2 - i lambda c1, both routes on the grid.
  for (double lam : {0.3, 1.0, 7.0}) {
    const complexd t = p.gamma * diffusive_transfer({0.0, lam}, g, p);
    const auto [d1, d2] = c1_c2(lam, p, g);
    CHECK(t.real() == doctest::Approx(d2).epsilon(1e-12));
    CHECK(-t.imag() == doctest::Approx(lam * d1).epsilon(1e-12));
  }

  SUBCASE("precondition") {
    FracParams q{0.5, 0.0, 1.0};
    CHECK_THROWS_AS(c1_c2(0.0, q, g), std::invalid_argument);
    CHECK_NOTHROW(c1_c2(0.5, q, g));
  }
}

TEST_CASE("c1/c2 large-lambda scaling follows (i lambda + eta)^(alpha-1)") {
  // c2 ~ gamma sin(pi alpha/2) lambda^(alpha-1),
  // c1 ~ gamma cos(pi alpha/2) lambda^(alpha-2); quadrature oracle at 1e4.
  FracParams p{0.3, 1.0, 2.0};
  const XiGrid g = build_xi_grid(p, 100.0, 1e-8);
  const double lam = 1e4;
  const auto [c1, c2] = c1_c2(lam, p, g);
  const double a = p.alpha;
  CHECK(c2 * std::pow(lam, 1.0 - a) ==
        doctest::Approx(p.gamma * std::sin(M_PI * a / 2.0)).epsilon(2e-4));
  CHECK(c1 * std::pow(lam, 2.0 - a) ==
        doctest::Approx(p.gamma * std::cos(M_PI * a / 2.0)).epsilon(2e-4));
}

TEST_CASE("A integrals") {
  FracParams p{0.5, 0.5, 1.0};
  const XiGrid g = build_xi_grid(p, 100.0, 1e-8);
  SUBCASE("closed forms at |lambda|+eta = 1") {
    const auto v = a_integrals(0.5, p, g);
    CHECK(v.a2 == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-12));
    CHECK(v.a3 == doctest::Approx(std::sqrt(M_PI) / 4.0).epsilon(1e-12));
    CHECK(v.a2 == doctest::Approx(1.253314).epsilon(1e-6));
    CHECK(v.a3 == doctest::Approx(0.443113).epsilon(1e-5));
  }
  SUBCASE("A1 scaling constant across three decades") {
    FracParams q{0.3, 1.0, 1.0};
    const XiGrid gq = build_xi_grid(q, 100.0, 1e-8);
    std::vector<double> scaled;
    for (double lam : {10.0, 100.0, 1000.0}) {
      const auto v = a_integrals(lam, q, gq);
      scaled.push_back(v.a1 *
                       std::pow(lam + q.eta, 1.25 - 0.5 * q.alpha));
    }
    CHECK(std::abs(scaled[1] - scaled[0]) / scaled[0] < 0.01);
    CHECK(std::abs(scaled[2] - scaled[1]) / scaled[1] < 0.01);
    // cross-check one value against an independent adaptive quadrature
    const double m = 100.0 + q.eta;
    const double direct = 2.0 * adaptive_simpson(
                                    [&](double xi) {
                                      return std::pow(xi, q.alpha + 0.5) /
                                             std::pow(m + xi * xi, 2.0);
                                    },
                                    1e-8, 1e4, 1e-12);
    CHECK(a_integrals(100.0, q, gq).a1 ==
          doctest::Approx(direct).epsilon(1e-4));
  }
  CHECK_THROWS_AS(a_integrals(0.0, p, g), std::invalid_argument);
}

TEST_CASE("sampled signal construction") {
  CHECK_THROWS_AS(SampledSignal(0.0, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(SampledSignal({0.0, 0.1, 0.3}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);  // non-uniform
  CHECK_THROWS_AS(SampledSignal({0.5, 1.0, 1.5}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);  // does not start at 0
  CHECK_NOTHROW(SampledSignal({0.0, 0.5, 1.0}, {1.0, 2.0, 3.0}));
}

TEST_CASE("caputo derivative oracles") {
  const double dt = 1e-3;
  const size_t n = 5001;

  SUBCASE("constant signal maps to zero") {
    SampledSignal sig(dt, std::vector<double>(n, 3.7));
    const auto out = caputo_direct(sig, {0.4, 0.8, 1.0});
    for (double v : out.values) CHECK(std::abs(v) < 1e-10);
  }

  SUBCASE("identity signal, eta = 0: t^(1-alpha)/Gamma(2-alpha)") {
    std::vector<double> vals(n);
    for (size_t k = 0; k < n; ++k) vals[k] = k * dt;
    const auto out = caputo_direct({dt, vals}, {0.5, 0.0, 1.0});
    for (size_t k = 10; k < n; k += 500) {
      const double t = k * dt;
      const double exact = std::pow(t, 0.5) / std::tgamma(1.5);
      CHECK(out.values[k] == doctest::Approx(exact).epsilon(1e-6));
    }
  }

  SUBCASE("quadratic signal across orders: 2 t^(2-alpha)/Gamma(3-alpha)") {
    for (double alpha : {0.3, 0.5, 0.7}) {
      std::vector<double> vals(n);
      for (size_t k = 0; k < n; ++k) vals[k] = (k * dt) * (k * dt);
      const auto out = caputo_direct({dt, vals}, {alpha, 0.0, 1.0});
      double worst = 0.0;
      for (size_t k = 500; k < n; ++k) {
        const double t = k * dt;
        const double exact = 2.0 * std::pow(t, 2.0 - alpha) / std::tgamma(3.0 - alpha);
        worst = std::max(worst, std::abs(out.values[k] - exact) / exact);
      }
      CHECK(worst < 1e-3);
    }
  }

  SUBCASE("quadratic, eta = 0, alpha = 0.5 against adaptive quadrature") {
    std::vector<double> vals(2001);
    for (size_t k = 0; k < vals.size(); ++k) vals[k] = (k * dt) * (k * dt);
    const auto out = caputo_direct({dt, vals}, {0.5, 0.0, 1.0});
    const double t = 1.5;
    // int_0^t (t-s)^(-1/2) 2s ds / Gamma(1/2), substitution u = sqrt(t-s)
    const double oracle =
        adaptive_simpson(
            [t](double u) { return 2.0 * (t - u * u) * 2.0; }, 0.0,
            std::sqrt(t), 1e-12) /
        std::tgamma(0.5);
    CHECK(out.values[1500] == doctest::Approx(oracle).epsilon(1e-6));
  }

  SUBCASE("tempered quadratic against adaptive quadrature") {
    const double eta = 0.7, alpha = 0.4, t = 1.2;
    std::vector<double> vals(1501);
    for (size_t k = 0; k < vals.size(); ++k) vals[k] = (k * dt) * (k * dt);
    const auto out = caputo_direct({dt, vals}, {alpha, eta, 1.0});
    const double oracle =
        adaptive_simpson(
            [=](double u) {
              // tau = u^(1/(1-alpha)) flattens the endpoint singularity;
              // tau^(-alpha) d tau = du/(1-alpha) exactly
              const double tau = std::pow(u, 1.0 / (1.0 - alpha));
              return std::exp(-eta * tau) * 2.0 * (t - tau) / (1.0 - alpha);
            },
            0.0, std::pow(t, 1.0 - alpha), 1e-13) /
        std::tgamma(1.0 - alpha);
    CHECK(out.values[1200] == doctest::Approx(oracle).epsilon(1e-5));
  }

  SUBCASE("rejects bad orders") {
    SampledSignal sig(dt, std::vector<double>(16, 1.0));
    CHECK_THROWS_AS(caputo_direct(sig, {1.2, 0.0, 1.0}), std::invalid_argument);
  }
}

TEST_CASE("fractional integral oracles") {
  const double dt = 1e-3;
  const size_t n = 3001;

  SUBCASE("zero maps to zero") {
    const auto out =
        frac_integral_direct({dt, std::vector<double>(n, 0.0)}, {0.5, 1.0, 1.0});
    for (double v : out.values) CHECK(v == 0.0);
  }

  SUBCASE("unit signal, eta = 0: t^alpha/Gamma(alpha+1)") {
    for (double alpha : {0.3, 0.6}) {
      const auto out = frac_integral_direct({dt, std::vector<double>(n, 1.0)},
                                            {alpha, 0.0, 1.0});
      for (size_t k = 100; k < n; k += 700) {
        const double t = k * dt;
        const double exact = std::pow(t, alpha) / std::tgamma(alpha + 1.0);
        CHECK(out.values[k] == doctest::Approx(exact).epsilon(1e-6));
      }
    }
  }

  SUBCASE("composition identity: caputo(alpha) = I(1-alpha) of derivative") {
    const double alpha = 0.35, eta = 0.6;
    std::vector<double> vals(2001);
    for (size_t k = 0; k < vals.size(); ++k) {
      const double t = k * dt;
      vals[k] = t * t * std::exp(-t) + 0.3 * std::sin(3.0 * t);
    }
    const auto lhs = caputo_direct({dt, vals}, {alpha, eta, 1.0});
    SampledSignal dsig(dt, sampled_derivative(vals, dt));
    const auto rhs = frac_integral_direct(dsig, {1.0 - alpha, eta, 1.0});
    double worst = 0.0, scale = 0.0;
    for (size_t k = 0; k < vals.size(); ++k) {
      worst = std::max(worst, std::abs(lhs.values[k] - rhs.values[k]));
      scale = std::max(scale, std::abs(lhs.values[k]));
    }
    // product-integration truncation is O(dt^2) on these signals
    CHECK(worst <= 10.0 * dt * dt * std::max(1.0, scale));
  }

  SUBCASE("monomial property across m") {
    for (int m : {1, 2, 3}) {
      const double alpha = 0.45;
      std::vector<double> vals(2001);
      for (size_t k = 0; k < vals.size(); ++k) vals[k] = std::pow(k * dt, m);
      const auto out = caputo_direct({dt, vals}, {alpha, 0.0, 1.0});
      const double pref = std::tgamma(m + 1.0) / std::tgamma(m + 1.0 - alpha);
      double worst = 0.0;
      for (size_t k = 10; k < vals.size(); ++k) {
        const double exact = pref * std::pow(k * dt, m - alpha);
        worst = std::max(worst, std::abs(out.values[k] - exact) / exact);
      }
      CHECK(worst <= 1e-3);
    }
  }
}
