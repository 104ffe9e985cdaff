#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "params.hpp"
#include "xi_grid.hpp"

namespace fracwave {

// Uniform spatial grid on (0,1): nodes x_i = i*h, i = 0..n_cells.
struct SpatialGrid {
  int n_cells = 200;
  double h() const { return 1.0 / n_cells; }
  explicit SpatialGrid(int cells) : n_cells(cells) {
    if (cells < 16) throw std::invalid_argument("n_cells must be >= 16");
  }
};

// Semi-discrete state. Boundary values u(0)=0, y(0)=y(1)=0 are eliminated;
// the stored unknowns are u_1..u_N, v_1..v_N, y_1..y_{N-1}, z_1..z_{N-1},
// omega_1..omega_M, packed in that order.
struct SimState {
  Eigen::VectorXd packed;
  double t = 0.0;
};

struct EnergyTrace {
  SystemParams params;
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> dissipation;
  std::vector<double> balance_residual;  // residual_0 = 0 by convention
  double balance_total = 0.0;
  double balance_max = 0.0;
};

// Closed-form initial profiles, all satisfying u(0)=0, y(0)=y(1)=0 and the
// zero-flux compatibility u0'(1)=0 forced by omega(.,0)=0.
struct InitialData {
  std::function<double(double)> u0, v0, y0, z0;
  static InitialData parse(const std::string& selector, const SystemParams& p);
};

// The assembled augmented system: second-order centered interior stencils,
// velocity coupling, per-node relaxation of the diffusive variable, and the
// fractional boundary row at x=1 with the ghost value eliminated through the
// discrete flux condition.
class Simulator {
 public:
  Simulator(const SystemParams& p, const SpatialGrid& grid, const XiGrid& xi);

  const Eigen::SparseMatrix<double>& generator() const { return gen_; }
  int n_cells() const { return grid_.n_cells; }
  Eigen::Index dim() const { return gen_.rows(); }

  SimState make_state(const InitialData& data) const;

  // One Crank-Nicolson step (unconditionally stable; the factorization of
  // I - dt/2 A is cached per dt).
  void step_cn(SimState& state, double dt);

  double energy(const SimState& state) const;
  double dissipation(const SimState& state) const;

  EnergyTrace run(const InitialData& data, double dt, double t_final);
  EnergyTrace run(const std::string& selector, double dt, double t_final);

  // Field accessors (boundary values re-inserted).
  std::vector<double> field_u(const SimState& s) const;
  std::vector<double> field_y(const SimState& s) const;

 private:
  void factorize(double dt);

  SystemParams p_;
  SpatialGrid grid_;
  XiGrid xi_;
  std::vector<double> mu_;
  Eigen::SparseMatrix<double> gen_;
  Eigen::SparseMatrix<double> lhs_, rhs_;
  std::unique_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> lu_;
  double factored_dt_ = -1.0;

  Eigen::Index iu_, iv_, iy_, iz_, io_;
};

}  // namespace fracwave
