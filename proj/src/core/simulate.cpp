#include "simulate.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stability.hpp"

namespace fracwave {

namespace {

// "name:key=val,key=val" -> (name, map)
std::pair<std::string, std::map<std::string, double>> parse_selector(
    const std::string& s) {
  const auto colon = s.find(':');
  std::map<std::string, double> kv;
  if (colon == std::string::npos) return {s, kv};
  std::string name = s.substr(0, colon);
  std::stringstream rest(s.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad initial-data selector: " + s);
    kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return {name, kv};
}

double kv_get(const std::map<std::string, double>& kv, const std::string& key,
              double fallback) {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

}  // namespace

InitialData InitialData::parse(const std::string& selector,
                               const SystemParams& p) {
  auto [name, kv] = parse_selector(selector);
  auto zero = [](double) { return 0.0; };
  InitialData d{zero, zero, zero, zero};
  if (name == "zero") return d;
  if (name == "u_half_sine") {
    d.u0 = [](double x) { return std::sin(0.5 * M_PI * x); };
    return d;
  }
  if (name == "u_three_half_sine") {
    d.u0 = [](double x) { return std::sin(1.5 * M_PI * x); };
    return d;
  }
  // Velocity profiles vanish at x = 1 as well: omega(.,0) = 0 with
  // v(1,0) != 0 puts the solution in the rough t^(1-alpha) startup layer
  // (the flux-rate compatibility would need the divergent integral of
  // mu^2), which second-order balance bookkeeping cannot represent.
  if (name == "smooth_mix") {
    d.u0 = [](double x) { return std::sin(1.5 * M_PI * x); };
    d.v0 = [](double x) { return x * (1.0 - x); };
    d.y0 = [](double x) { return std::sin(M_PI * x); };
    d.z0 = [](double x) { return 0.3 * std::sin(2.0 * M_PI * x); };
    return d;
  }
  if (name == "modal_tail") {
    // Velocity data with modal energy ~ m^(-2q): the slowly damped high
    // branches carry enough weight to expose the polynomial envelope at
    // desk-scale horizons.
    const double q = kv_get(kv, "q", 1.3);
    const int count = static_cast<int>(kv_get(kv, "count", 100));
    if (count < 1) throw std::invalid_argument("modal_tail needs count >= 1");
    d.v0 = [q, count](double x) {
      double acc = 0.0;
      for (int m = 1; m <= count; ++m)
        acc += std::pow(m, -q) * std::sin(m * M_PI * x);
      return acc;
    };
    d.z0 = d.v0;
    return d;
  }
  if (name == "random") {
    const unsigned seed = static_cast<unsigned>(kv_get(kv, "seed", 1.0));
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    constexpr int kModes = 8;
    std::vector<double> cu(kModes), cv(kModes), cy(kModes), cz(kModes);
    for (int m = 0; m < kModes; ++m) {
      const double decay = std::pow(m + 1.0, -2.0);
      cu[m] = gauss(rng) * decay;
      cv[m] = gauss(rng) * decay;
      cy[m] = gauss(rng) * decay;
      cz[m] = gauss(rng) * decay;
    }
    // u-basis sin((m+1/2) pi x) has zero slope at x=1; the velocity and
    // y/z bases sin(m pi x) vanish at both ends.
    d.u0 = [cu](double x) {
      double acc = 0.0;
      for (size_t m = 0; m < cu.size(); ++m)
        acc += cu[m] * std::sin((m + 0.5) * M_PI * x);
      return acc;
    };
    d.v0 = [cv](double x) {
      double acc = 0.0;
      for (size_t m = 0; m < cv.size(); ++m)
        acc += cv[m] * std::sin((m + 1.0) * M_PI * x);
      return acc;
    };
    d.y0 = [cy](double x) {
      double acc = 0.0;
      for (size_t m = 0; m < cy.size(); ++m)
        acc += cy[m] * std::sin((m + 1.0) * M_PI * x);
      return acc;
    };
    d.z0 = [cz](double x) {
      double acc = 0.0;
      for (size_t m = 0; m < cz.size(); ++m)
        acc += cz[m] * std::sin((m + 1.0) * M_PI * x);
      return acc;
    };
    return d;
  }
  if (name == "exceptional") {
    // Real part of the undamped eigenmode of (k1,k2) at its exceptional
    // coupling: u0 = 0, v0 = -lambda*phi, y0 = (lambda^2 phi + phi'')/
    // (lambda b), z0 = 0, with phi the sine profile.
    const int k1 = static_cast<int>(kv_get(kv, "k1", 2));
    const int k2 = static_cast<int>(kv_get(kv, "k2", 1));
    const auto e = exceptional_eigenpair(p.a, k1, k2);
    const double c1 = e.coeff_k1, c2 = e.coeff_k2, lam = e.lambda, b = e.b;
    auto phi = [c1, c2, k1, k2](double x) {
      return c1 * std::sin(k1 * M_PI * x) + c2 * std::sin(k2 * M_PI * x);
    };
    auto phi_xx = [c1, c2, k1, k2](double x) {
      return -c1 * std::pow(k1 * M_PI, 2) * std::sin(k1 * M_PI * x) -
             c2 * std::pow(k2 * M_PI, 2) * std::sin(k2 * M_PI * x);
    };
    d.v0 = [phi, lam](double x) { return -lam * phi(x); };
    d.y0 = [phi, phi_xx, lam, b](double x) {
      return (lam * lam * phi(x) + phi_xx(x)) / (lam * b);
    };
    return d;
  }
  throw std::invalid_argument("unknown initial-data selector: " + selector);
}

Simulator::Simulator(const SystemParams& p, const SpatialGrid& grid,
                     const XiGrid& xi)
    : p_(p), grid_(grid), xi_(xi) {
  // b = 0 and gamma = 0 are admitted here: structural decoupling and the
  // conservative limit are part of the contract even though the spectral
  // analysis excludes them.
  if (!(p.a > 0.0)) throw std::invalid_argument("a must be positive");
  if (!(p.frac.alpha > 0.0) || !(p.frac.alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
  if (!(p.frac.eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
  if (!(p.frac.gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");

  const int N = grid_.n_cells;
  const double h = grid_.h();
  const Eigen::Index M = static_cast<Eigen::Index>(xi_.size());
  iu_ = 0;
  iv_ = N;
  iy_ = 2 * N;
  iz_ = 2 * N + (N - 1);
  io_ = 2 * N + 2 * (N - 1);
  const Eigen::Index dim = io_ + M;

  mu_.resize(xi_.size());
  for (size_t j = 0; j < xi_.size(); ++j) mu_[j] = mu(xi_.nodes[j], p.frac.alpha);

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(8 * dim);
  const double ih2 = 1.0 / (h * h);
  const double gk = p_.frac.gamma * kappa_of(p_.frac.alpha);

  // u' = v
  for (int i = 1; i <= N; ++i) trip.emplace_back(iu_ + i - 1, iv_ + i - 1, 1.0);
  // v' = u_xx - b z (interior)
  for (int i = 1; i < N; ++i) {
    trip.emplace_back(iv_ + i - 1, iu_ + i - 1, -2.0 * ih2);
    if (i > 1) trip.emplace_back(iv_ + i - 1, iu_ + i - 2, ih2);
    trip.emplace_back(iv_ + i - 1, iu_ + i, ih2);
    if (p_.b != 0.0) trip.emplace_back(iv_ + i - 1, iz_ + i - 1, -p_.b);
  }
  // boundary row at x = 1: ghost value eliminated via
  // u_x(1) = -gamma kappa sum w mu omega, z(1) = 0
  trip.emplace_back(iv_ + N - 1, iu_ + N - 2, 2.0 * ih2);
  trip.emplace_back(iv_ + N - 1, iu_ + N - 1, -2.0 * ih2);
  for (Eigen::Index j = 0; j < M; ++j) {
    const double c = -(2.0 / h) * gk * xi_.weights[j] * mu_[j];
    if (c != 0.0) trip.emplace_back(iv_ + N - 1, io_ + j, c);
  }
  // y' = z, z' = a y_xx + b v (Dirichlet both ends)
  for (int i = 1; i < N; ++i) {
    trip.emplace_back(iy_ + i - 1, iz_ + i - 1, 1.0);
    trip.emplace_back(iz_ + i - 1, iy_ + i - 1, -2.0 * p_.a * ih2);
    if (i > 1) trip.emplace_back(iz_ + i - 1, iy_ + i - 2, p_.a * ih2);
    if (i < N - 1) trip.emplace_back(iz_ + i - 1, iy_ + i, p_.a * ih2);
    if (p_.b != 0.0) trip.emplace_back(iz_ + i - 1, iv_ + i - 1, p_.b);
  }
  // omega' = -(xi^2 + eta) omega + mu v(1)
  for (Eigen::Index j = 0; j < M; ++j) {
    trip.emplace_back(io_ + j, io_ + j,
                      -(xi_.nodes[j] * xi_.nodes[j] + p_.frac.eta));
    trip.emplace_back(io_ + j, iv_ + N - 1, mu_[j]);
  }

  gen_.resize(dim, dim);
  gen_.setFromTriplets(trip.begin(), trip.end());
  gen_.makeCompressed();
}

SimState Simulator::make_state(const InitialData& data) const {
  const int N = grid_.n_cells;
  const double h = grid_.h();
  SimState s;
  s.packed = Eigen::VectorXd::Zero(dim());
  for (int i = 1; i <= N; ++i) {
    s.packed[iu_ + i - 1] = data.u0(i * h);
    s.packed[iv_ + i - 1] = data.v0(i * h);
  }
  for (int i = 1; i < N; ++i) {
    s.packed[iy_ + i - 1] = data.y0(i * h);
    s.packed[iz_ + i - 1] = data.z0(i * h);
  }
  return s;
}

void Simulator::factorize(double dt) {
  if (dt == factored_dt_) return;
  const Eigen::Index n = dim();
  Eigen::SparseMatrix<double> eye(n, n);
  eye.setIdentity();
  lhs_ = eye - (dt / 2.0) * gen_;
  rhs_ = eye + (dt / 2.0) * gen_;
  lu_ = std::make_unique<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
  lu_->compute(lhs_);
  if (lu_->info() != Eigen::Success)
    throw std::runtime_error("Crank-Nicolson factorization failed (dt*spectrum hits 2/mu?)");
  factored_dt_ = dt;
}

void Simulator::step_cn(SimState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  factorize(dt);
  state.packed = lu_->solve(rhs_ * state.packed);
  if (lu_->info() != Eigen::Success)
    throw std::runtime_error("Crank-Nicolson solve failed");
  state.t += dt;
}

double Simulator::energy(const SimState& s) const {
  const int N = grid_.n_cells;
  const double h = grid_.h();
  const auto& U = s.packed;
  double acc = 0.0;
  // velocities, trapezoid weights (v_0 = 0, z_0 = z_N = 0)
  for (int i = 1; i <= N; ++i) {
    const double cw = (i == N) ? 0.5 : 1.0;
    acc += h * cw * U[iv_ + i - 1] * U[iv_ + i - 1];
  }
  for (int i = 1; i < N; ++i) acc += h * U[iz_ + i - 1] * U[iz_ + i - 1];
  // gradients at midpoints
  double prev = 0.0;
  for (int i = 1; i <= N; ++i) {
    const double du = (U[iu_ + i - 1] - prev) / h;
    acc += h * du * du;
    prev = U[iu_ + i - 1];
  }
  prev = 0.0;
  for (int i = 1; i <= N; ++i) {
    const double yi = (i < N) ? U[iy_ + i - 1] : 0.0;
    const double dy = (yi - prev) / h;
    acc += p_.a * h * dy * dy;
    prev = yi;
  }
  const double gk = p_.frac.gamma * kappa_of(p_.frac.alpha);
  for (size_t j = 0; j < xi_.size(); ++j) {
    const double om = U[io_ + static_cast<Eigen::Index>(j)];
    acc += gk * xi_.weights[j] * om * om;
  }
  return 0.5 * acc;
}

double Simulator::dissipation(const SimState& s) const {
  const double gk = p_.frac.gamma * kappa_of(p_.frac.alpha);
  double acc = 0.0;
  for (size_t j = 0; j < xi_.size(); ++j) {
    const double om = s.packed[io_ + static_cast<Eigen::Index>(j)];
    acc += xi_.weights[j] * (xi_.nodes[j] * xi_.nodes[j] + p_.frac.eta) * om * om;
  }
  return gk * acc;
}

EnergyTrace Simulator::run(const InitialData& data, double dt, double t_final) {
  if (!(dt > 0.0) || !(t_final > 0.0))
    throw std::invalid_argument("dt and t_final must be positive");
  SimState state = make_state(data);
  const long steps = std::lround(t_final / dt);
  EnergyTrace trace;
  trace.params = p_;
  trace.times.reserve(steps + 1);
  trace.energy.reserve(steps + 1);
  trace.dissipation.reserve(steps + 1);
  trace.balance_residual.reserve(steps + 1);
  trace.times.push_back(0.0);
  trace.energy.push_back(energy(state));
  trace.dissipation.push_back(dissipation(state));
  trace.balance_residual.push_back(0.0);
  for (long k = 0; k < steps; ++k) {
    step_cn(state, dt);
    const double e = energy(state), d = dissipation(state);
    const double res = std::abs(e - trace.energy.back() +
                                dt * (d + trace.dissipation.back()) / 2.0);
    trace.times.push_back(state.t);
    trace.energy.push_back(e);
    trace.dissipation.push_back(d);
    trace.balance_residual.push_back(res);
    trace.balance_total += res;
    trace.balance_max = std::max(trace.balance_max, res);
  }
  return trace;
}

EnergyTrace Simulator::run(const std::string& selector, double dt,
                           double t_final) {
  return run(InitialData::parse(selector, p_), dt, t_final);
}

std::vector<double> Simulator::field_u(const SimState& s) const {
  const int N = grid_.n_cells;
  std::vector<double> u(N + 1, 0.0);
  for (int i = 1; i <= N; ++i) u[i] = s.packed[iu_ + i - 1];
  return u;
}

std::vector<double> Simulator::field_y(const SimState& s) const {
  const int N = grid_.n_cells;
  std::vector<double> y(N + 1, 0.0);
  for (int i = 1; i < N; ++i) y[i] = s.packed[iy_ + i - 1];
  return y;
}

}  // namespace fracwave
