#include <doctest.h>

#include <cmath>

#include "core/simulate.hpp"
#include "core/stability.hpp"
#include "core/xi_grid.hpp"

using namespace fracwave;

namespace {

XiGrid sim_grid(const FracParams& p, int n_cells, double tol = 1e-8) {
  XiGridOptions opt;
  opt.sweep_points = 24;
  return build_xi_grid(p, M_PI * n_cells, tol, opt);
}

SystemParams params(double a, double b, double gamma = 1.0) {
  return {a, b, {0.5, 1.0, gamma}};
}

}  // namespace

TEST_CASE("assembly structure") {
  const FracParams fp{0.5, 1.0, 1.0};
  const XiGrid xg = sim_grid(fp, 32);

  SUBCASE("rejects under-resolved grids") {
    CHECK_THROWS_AS(Simulator(params(1.0, 1.0), SpatialGrid(8), xg),
                    std::invalid_argument);
  }

  SUBCASE("b = 0 decouples the two waves") {
    const int N = 32;
    Simulator sim(params(1.0, 0.0), SpatialGrid(N), xg);
    const auto& A = sim.generator();
    // u/v block indices [0, 2N), y/z block [2N, 4N-2)
    const auto lo = 2 * N, hi = 4 * N - 2;
    for (int k = 0; k < A.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
        const bool row_uv = it.row() < lo;
        const bool col_uv = it.col() < lo;
        const bool row_yz = it.row() >= lo && it.row() < hi;
        const bool col_yz = it.col() >= lo && it.col() < hi;
        if ((row_uv && col_yz) || (row_yz && col_uv))
          CHECK(it.value() == 0.0);
      }
  }

  SUBCASE("energy is a quadratic form") {
    Simulator sim(params(1.0, 1.0), SpatialGrid(32), xg);
    auto s = sim.make_state(InitialData::parse("smooth_mix", params(1.0, 1.0)));
    const double e1 = sim.energy(s);
    s.packed *= 3.0;
    CHECK(sim.energy(s) == doctest::Approx(9.0 * e1).epsilon(1e-13));
    s.packed.setZero();
    CHECK(sim.energy(s) == 0.0);
  }

  SUBCASE("discrete energy matches the closed form for sin(pi x/2)") {
    const int N = 200;
    const XiGrid g2 = sim_grid(fp, N);
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), g2);
    auto s = sim.make_state(InitialData::parse("u_half_sine", params(1.0, 1.0)));
    // E(0) = (1/2) int (pi/2 cos(pi x/2))^2 = pi^2/16, to O(h^2)
    CHECK(sim.energy(s) ==
          doctest::Approx(M_PI * M_PI / 16.0).epsilon(1e-4));
  }
}

TEST_CASE("crank-nicolson stepping") {
  const FracParams fp{0.5, 1.0, 1.0};
  const int N = 64;
  const XiGrid xg = sim_grid(fp, N);
  const double dt = 0.5 / N;

  SUBCASE("zero state stays zero") {
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), xg);
    auto s = sim.make_state(InitialData::parse("zero", params(1.0, 1.0)));
    sim.step_cn(s, dt);
    CHECK(s.packed.norm() == 0.0);
    CHECK(s.t == doctest::Approx(dt));
  }

  SUBCASE("conservative limit gamma = 0, b = 0 holds energy to 1e-10") {
    SystemParams p = params(1.0, 0.0, 0.0);
    Simulator sim(p, SpatialGrid(N), xg);
    const auto tr = sim.run("u_three_half_sine", dt, 1.0);
    const double drift =
        std::abs(tr.energy.back() - tr.energy.front()) / tr.energy.front();
    CHECK(drift <= 1e-10);
  }

  SUBCASE("gamma = 0 with coupling still conserves") {
    SystemParams p = params(1.0, 1.0, 0.0);
    Simulator sim(p, SpatialGrid(N), xg);
    const auto tr = sim.run("smooth_mix", dt, 1.0);
    const double drift =
        std::abs(tr.energy.back() - tr.energy.front()) / tr.energy.front();
    CHECK(drift <= 1e-10);
  }

  SUBCASE("energy decreases monotonically over random initial states") {
    SystemParams p = params(1.0, 1.0);
    Simulator sim(p, SpatialGrid(N), xg);
    for (unsigned seed = 1; seed <= 10; ++seed) {
      const auto tr =
          sim.run("random:seed=" + std::to_string(seed), dt, 0.5);
      const double e0 = tr.energy.front();
      REQUIRE(e0 > 0.0);
      for (size_t k = 1; k < tr.energy.size(); ++k)
        CHECK(tr.energy[k] <= tr.energy[k - 1] + 1e-12 * e0);
    }
  }

  SUBCASE("step failure paths") {
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), xg);
    auto s = sim.make_state(InitialData::parse("zero", params(1.0, 1.0)));
    CHECK_THROWS_AS(sim.step_cn(s, -0.1), std::invalid_argument);
  }
}

TEST_CASE("runs and balance bookkeeping") {
  const FracParams fp{0.5, 1.0, 1.0};

  SUBCASE("trivial data gives the zero trace") {
    const int N = 32;
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), sim_grid(fp, N));
    const auto tr = sim.run("zero", 0.5 / N, 0.5);
    for (double e : tr.energy) CHECK(e == 0.0);
    for (double d : tr.dissipation) CHECK(d == 0.0);
    CHECK(tr.balance_max == 0.0);
  }

  SUBCASE("balance residual bound and second-order refinement") {
    // Frozen regression constant C = 0.01 on the per-step bound
    // max_res <= C (dt^2 + h^2) E(0); the run-total residual is the
    // second-order quantity and contracts by ~4 per joint halving.
    double totals[2], e0s[2];
    int idx = 0;
    for (int N : {64, 128}) {
      Simulator sim(params(1.0, 1.0), SpatialGrid(N), sim_grid(fp, N));
      const double dt = 0.5 / N;
      const auto tr = sim.run("smooth_mix", dt, 5.0);
      const double h = 1.0 / N;
      CHECK(tr.balance_max <= 0.01 * (dt * dt + h * h) * tr.energy.front());
      totals[idx] = tr.balance_total;
      e0s[idx] = tr.energy.front();
      ++idx;
    }
    const double ratio = totals[0] / totals[1];
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
  }

  SUBCASE("standard coupled run halves its energy by T = 50") {
    const int N = 100;
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), sim_grid(fp, N));
    const auto tr = sim.run("smooth_mix", 0.5 / N, 50.0);
    CHECK(tr.energy.back() / tr.energy.front() < 0.5);
    for (size_t k = 1; k < tr.energy.size(); ++k)
      CHECK(tr.energy[k] <= tr.energy[k - 1] + 1e-12 * tr.energy.front());
  }

  SUBCASE("run guards") {
    const int N = 32;
    Simulator sim(params(1.0, 1.0), SpatialGrid(N), sim_grid(fp, N));
    CHECK_THROWS_AS(sim.run("no_such_profile", 0.01, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sim.run("zero", 0.01, -1.0), std::invalid_argument);
  }
}

TEST_CASE("initial data library") {
  const SystemParams p = params(1.0, 1.0);

  SUBCASE("profiles satisfy the boundary and compatibility constraints") {
    for (const char* sel :
         {"u_half_sine", "u_three_half_sine", "smooth_mix",
          "modal_tail:q=1.5,count=20", "random:seed=7", "exceptional:k1=2,k2=1"}) {
      const auto d = InitialData::parse(sel, p);
      CHECK(std::abs(d.u0(0.0)) < 1e-12);
      CHECK(std::abs(d.y0(0.0)) < 1e-12);
      CHECK(std::abs(d.y0(1.0)) < 1e-12);
      // compatibility u0'(1) = 0 forced by omega(.,0) = 0
      const double h = 1e-6;
      const double du1 = (d.u0(1.0) - d.u0(1.0 - h)) / h;
      CHECK(std::abs(du1) < 1e-4);
    }
  }

  SUBCASE("random profiles are deterministic in the seed") {
    const auto d1 = InitialData::parse("random:seed=3", p);
    const auto d2 = InitialData::parse("random:seed=3", p);
    const auto d3 = InitialData::parse("random:seed=4", p);
    CHECK(d1.u0(0.37) == d2.u0(0.37));
    CHECK(d1.u0(0.37) != d3.u0(0.37));
  }

  SUBCASE("exceptional profile matches the eigenpair") {
    const auto e = exceptional_eigenpair(1.0, 2, 1);
    const auto d = InitialData::parse("exceptional:k1=2,k2=1", p);
    // v0 = -lambda (coeff1 sin(2 pi x) + coeff2 sin(pi x))
    const double x = 0.3;
    const double phi = e.coeff_k1 * std::sin(2.0 * M_PI * x) +
                       e.coeff_k2 * std::sin(M_PI * x);
    CHECK(d.v0(x) == doctest::Approx(-e.lambda * phi).epsilon(1e-12));
    CHECK(d.u0(x) == 0.0);
    CHECK(d.z0(x) == 0.0);
  }

  CHECK_THROWS_AS(InitialData::parse("modal_tail:q", p), std::invalid_argument);
}
