// extern "C" surface of the fracwave shared library. Exceptions from the
// core are converted to status codes with a thread-local message.

#include "fracwave.h"

#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "core/abscissa.hpp"
#include "core/characteristic.hpp"
#include "core/convolution.hpp"
#include "core/decay.hpp"
#include "core/simulate.hpp"
#include "core/stability.hpp"
#include "core/verify.hpp"
#include "core/xi_grid.hpp"

using nlohmann::json;
namespace fw = fracwave;

namespace {

thread_local std::string g_last_error = "no error";

fw_status fail(fw_status s, const char* what) {
  g_last_error = what;
  return s;
}

fw_status guard(const std::function<void()>& body) {
  try {
    body();
    return FW_OK;
  } catch (const std::invalid_argument& e) {
    return fail(FW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(FW_ERR_DOMAIN, e.what());
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    if (msg.find("cap") != std::string::npos)
      return fail(FW_ERR_CAP_EXCEEDED, e.what());
    if (msg.find("failed") != std::string::npos ||
        msg.find("fewer than") != std::string::npos)
      return fail(FW_ERR_NO_CONVERGENCE, e.what());
    return fail(FW_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(FW_ERR_INTERNAL, e.what());
  }
}

fw::FracParams to_core(const fw_frac_params& p) {
  return {p.alpha, p.eta, p.gamma};
}

fw::SystemParams to_core(const fw_system_params& p) {
  return {p.a, p.b, to_core(p.frac)};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json params_json(const fw::SystemParams& p) {
  return json{{"a", p.a},
              {"b", p.b},
              {"alpha", p.frac.alpha},
              {"eta", p.frac.eta},
              {"gamma", p.frac.gamma}};
}

void fill_estimate(const fw::EigenEstimate& est, fw_eigen_estimate* out) {
  out->re_lambda = est.lambda.real();
  out->im_lambda = est.lambda.imag();
  out->re_seed = est.seed.real();
  out->im_seed = est.seed.imag();
  out->residual = est.residual;
  out->iterations = est.iterations;
  out->converged = est.converged ? 1 : 0;
}

}  // namespace

struct fw_xi_grid {
  fw::XiGrid grid;
};
struct fw_root_scan {
  fw::AbscissaScan scan;
};
struct fw_sim {
  fw::Simulator sim;
  fw::SystemParams params;
};
struct fw_trace {
  fw::EnergyTrace trace;
};

extern "C" {

const char* fw_status_name(fw_status s) {
  switch (s) {
    case FW_OK: return "FW_OK";
    case FW_ERR_INVALID_ARGUMENT: return "FW_ERR_INVALID_ARGUMENT";
    case FW_ERR_CAP_EXCEEDED: return "FW_ERR_CAP_EXCEEDED";
    case FW_ERR_NO_CONVERGENCE: return "FW_ERR_NO_CONVERGENCE";
    case FW_ERR_SOLVE_FAILED: return "FW_ERR_SOLVE_FAILED";
    case FW_ERR_DOMAIN: return "FW_ERR_DOMAIN";
    case FW_ERR_INTERNAL: return "FW_ERR_INTERNAL";
  }
  return "FW_ERR_UNKNOWN";
}

const char* fw_last_error(void) { return g_last_error.c_str(); }

double fw_kappa(double alpha) { return fw::kappa_of(alpha); }

double fw_mu(double xi, double alpha) { return fw::mu(xi, alpha); }

fw_status fw_xi_grid_build(const fw_frac_params* p, double lambda_ref,
                           double target_tol, fw_xi_grid** out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *out = new fw_xi_grid{fw::build_xi_grid(to_core(*p), lambda_ref, target_tol)};
  });
}

fw_status fw_xi_grid_build_band(const fw_frac_params* p, double lambda_ref,
                                double target_tol, double sweep_lo,
                                double sweep_hi, int node_cap,
                                fw_xi_grid** out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::XiGridOptions opt;
    opt.sweep_lo = sweep_lo;
    opt.sweep_hi = sweep_hi;
    if (node_cap > 0) opt.node_cap = node_cap;
    *out = new fw_xi_grid{
        fw::build_xi_grid(to_core(*p), lambda_ref, target_tol, opt)};
  });
}

void fw_xi_grid_free(fw_xi_grid* g) { delete g; }

size_t fw_xi_grid_size(const fw_xi_grid* g) { return g ? g->grid.size() : 0; }

fw_status fw_xi_grid_nodes(const fw_xi_grid* g, double* out) {
  if (!g || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  std::memcpy(out, g->grid.nodes.data(), g->grid.size() * sizeof(double));
  return FW_OK;
}

fw_status fw_xi_grid_weights(const fw_xi_grid* g, double* out) {
  if (!g || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  std::memcpy(out, g->grid.weights.data(), g->grid.size() * sizeof(double));
  return FW_OK;
}

fw_status fw_diffusive_transfer(const fw_xi_grid* g, const fw_frac_params* p,
                                double re_lam, double im_lam, double* re_out,
                                double* im_out) {
  if (!g || !p || !re_out || !im_out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v =
        fw::diffusive_transfer({re_lam, im_lam}, g->grid, to_core(*p));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fw_status fw_c1_c2(const fw_xi_grid* g, const fw_frac_params* p, double lambda,
                   double* c1, double* c2) {
  if (!g || !p || !c1 || !c2)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto [v1, v2] = fw::c1_c2(lambda, to_core(*p), g->grid);
    *c1 = v1;
    *c2 = v2;
  });
}

fw_status fw_a_integrals(const fw_xi_grid* g, const fw_frac_params* p,
                         double lambda_abs, double* a1, double* a2,
                         double* a3) {
  if (!g || !p || !a1 || !a2 || !a3)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = fw::a_integrals(lambda_abs, to_core(*p), g->grid);
    *a1 = v.a1;
    *a2 = v.a2;
    *a3 = v.a3;
  });
}

fw_status fw_caputo_direct(const double* values, size_t n, double dt,
                           const fw_frac_params* p, double* out) {
  if (!values || !p || !out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::SampledSignal sig(dt, std::vector<double>(values, values + n));
    const auto r = fw::caputo_direct(sig, to_core(*p));
    std::memcpy(out, r.values.data(), n * sizeof(double));
  });
}

fw_status fw_frac_integral_direct(const double* values, size_t n, double dt,
                                  const fw_frac_params* p, double* out) {
  if (!values || !p || !out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::SampledSignal sig(dt, std::vector<double>(values, values + n));
    const auto r = fw::frac_integral_direct(sig, to_core(*p));
    std::memcpy(out, r.values.data(), n * sizeof(double));
  });
}

fw_status fw_sc_check(const fw_system_params* p, int k_max,
                      fw_sc_witness* out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto w = fw::sc_check(to_core(*p), k_max);
    out->violated = w.violated ? 1 : 0;
    out->k1 = w.k1;
    out->k2 = w.k2;
    out->b_exceptional = w.b_exceptional;
    out->lambda_imag = w.lambda_imag;
  });
}

fw_status fw_exceptional_eigenpair(double a, int k1, int k2, double* b,
                                   double* lambda, double* coeff1,
                                   double* coeff2) {
  if (!b || !lambda || !coeff1 || !coeff2)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto e = fw::exceptional_eigenpair(a, k1, k2);
    *b = e.b;
    *lambda = e.lambda;
    *coeff1 = e.coeff_k1;
    *coeff2 = e.coeff_k2;
  });
}

fw_status fw_char_equal(const fw_system_params* p, double re_lam,
                        double im_lam, double* re_out, double* im_out) {
  if (!p || !re_out || !im_out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = fw::char_equal_speed({re_lam, im_lam}, to_core(*p));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fw_status fw_char_general(const fw_system_params* p, double re_lam,
                          double im_lam, double* re_out, double* im_out) {
  if (!p || !re_out || !im_out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = fw::char_general_speed({re_lam, im_lam}, to_core(*p));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fw_status fw_asymptotic_root(const fw_system_params* p, int branch, long n,
                             double* re_out, double* im_out) {
  if (!p || !re_out || !im_out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = fw::asymptotic_root(branch, n, to_core(*p));
    *re_out = v.real();
    *im_out = v.imag();
  });
}

fw_status fw_remainder_scale(const fw_system_params* p, int branch, long n,
                             double* out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto cp = to_core(*p);
    *out = fw::remainder_scale({branch, n, fw::classify_b(cp.b)}, cp);
  });
}

fw_status fw_refine_root(const fw_system_params* p, double re_seed,
                         double im_seed, double tol, int max_iter,
                         fw_eigen_estimate* out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto cp = to_core(*p);
    fw::NewtonOptions opt;
    if (tol > 0.0) opt.tol = tol;
    if (max_iter > 0) opt.max_iter = max_iter;
    const auto est = fw::refine_root(
        [&cp](fw::complexd z) { return fw::characteristic(z, cp); },
        {re_seed, im_seed}, opt);
    fill_estimate(est, out);
  });
}

fw_status fw_abscissa_scan(const fw_system_params* p, int branch, long n_lo,
                           long n_hi, double tol, fw_root_scan** out) {
  if (!p || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::NewtonOptions opt;
    if (tol > 0.0) opt.tol = tol;
    *out = new fw_root_scan{
        fw::abscissa_scan(to_core(*p), branch, n_lo, n_hi, opt)};
  });
}

void fw_root_scan_free(fw_root_scan* s) { delete s; }

size_t fw_root_scan_size(const fw_root_scan* s) {
  return s ? s->scan.roots.size() : 0;
}

fw_status fw_root_scan_get(const fw_root_scan* s, size_t i, long* n,
                           fw_eigen_estimate* est) {
  if (!s || !n || !est) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= s->scan.roots.size())
    return fail(FW_ERR_INVALID_ARGUMENT, "scan index out of range");
  *n = s->scan.indices[i];
  fill_estimate(s->scan.roots[i], est);
  return FW_OK;
}

fw_status fw_root_scan_exponent(const fw_root_scan* s, double* slope) {
  if (!s || !slope) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  *slope = s->scan.fitted_exponent;
  return FW_OK;
}

fw_status fw_sim_create(const fw_system_params* p, int n_cells,
                        const fw_xi_grid* g, fw_sim** out) {
  if (!p || !g || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto cp = to_core(*p);
    *out = new fw_sim{fw::Simulator(cp, fw::SpatialGrid(n_cells), g->grid), cp};
  });
}

void fw_sim_free(fw_sim* s) { delete s; }

fw_status fw_sim_run(fw_sim* s, const char* initial_data, double dt,
                     double t_final, fw_trace** out) {
  if (!s || !initial_data || !out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    *out = new fw_trace{s->sim.run(initial_data, dt, t_final)};
  });
}

void fw_trace_free(fw_trace* t) { delete t; }

size_t fw_trace_size(const fw_trace* t) {
  return t ? t->trace.times.size() : 0;
}

fw_status fw_trace_row(const fw_trace* t, size_t i, double* time,
                       double* energy, double* dissipation,
                       double* balance_residual) {
  if (!t) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= t->trace.times.size())
    return fail(FW_ERR_INVALID_ARGUMENT, "trace index out of range");
  if (time) *time = t->trace.times[i];
  if (energy) *energy = t->trace.energy[i];
  if (dissipation) *dissipation = t->trace.dissipation[i];
  if (balance_residual) *balance_residual = t->trace.balance_residual[i];
  return FW_OK;
}

fw_status fw_trace_balance(const fw_trace* t, double* total,
                           double* max_step) {
  if (!t) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  if (total) *total = t->trace.balance_total;
  if (max_step) *max_step = t->trace.balance_max;
  return FW_OK;
}

fw_status fw_predicted_exponent(const fw_system_params* p, double* exponent,
                                int* defined) {
  if (!p || !exponent || !defined)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto v = fw::predicted_exponent(to_core(*p));
    *defined = v.has_value() ? 1 : 0;
    *exponent = v.value_or(0.0);
  });
}

fw_status fw_fit_decay_exponent(const fw_trace* t, double t_lo, double t_hi,
                                fw_decay_fit* out) {
  if (!t || !out) return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    const auto f = fw::fit_decay_exponent(t->trace, t_lo, t_hi);
    out->exponent = f.exponent;
    out->stderr_ = f.stderr_;
    out->t_lo = f.t_lo;
    out->t_hi = f.t_hi;
    out->r_squared = f.r_squared;
  });
}

fw_status fw_report_json(const fw_system_params* p, const fw_root_scan* scan,
                         const fw_system_params* scan_params,
                         const fw_decay_fit* fit,
                         const fw_system_params* fit_params, char** out) {
  if (!p || !scan || !scan_params || !fit || !fit_params || !out)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::AbscissaScan sc = scan->scan;
    sc.params = to_core(*scan_params);
    fw::DecayFit df{fit->exponent, fit->stderr_, fit->t_lo, fit->t_hi,
                    fit->r_squared};
    const auto r = fw::spectral_vs_energy_report(to_core(*p), sc, df,
                                                 to_core(*fit_params));
    json j;
    j["params"] = params_json(r.params);
    j["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
    j["abscissa_exponent"] = r.abscissa_exponent;
    j["expected_abscissa"] = r.expected_abscissa;
    j["fitted_exponent"] = r.fit.exponent;
    j["window"] = {r.fit.t_lo, r.fit.t_hi};
    j["r_squared"] = r.fit.r_squared;
    j["consistent"] = r.consistent;
    j["params_match"] = r.params_match;
    j["pre_asymptotic_window"] = r.pre_asymptotic;
    *out = dup_string(j.dump(2));
  });
}

fw_status fw_verify(const fw_system_params* p, double grid_tol,
                    double kappa_scale, char** out_json, int* all_passed) {
  if (!p || !out_json || !all_passed)
    return fail(FW_ERR_INVALID_ARGUMENT, "null argument");
  return guard([&] {
    fw::VerifyOptions opt;
    if (grid_tol > 0.0) opt.grid_tol = grid_tol;
    opt.kappa_scale = kappa_scale > 0.0 ? kappa_scale : 1.0;
    const auto checks = fw::run_verification(to_core(*p), opt);
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"name", c.name},
                         {"passed", c.passed},
                         {"skipped", c.skipped},
                         {"detail", c.detail}});
    json j;
    j["params"] = params_json(to_core(*p));
    j["checks"] = arr;
    j["all_passed"] = fw::all_passed(checks);
    *all_passed = fw::all_passed(checks) ? 1 : 0;
    *out_json = dup_string(j.dump(2));
  });
}

void fw_string_free(char* s) { std::free(s); }

}  // extern "C"
