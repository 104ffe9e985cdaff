/* fracwave — coupled wave equations with one fractional boundary damper.
 *
 * C API for the fracwave shared library. All functions return fw_status;
 * results go through output parameters. Opaque handles own their memory
 * and must be released with the matching *_free function. On any status
 * other than FW_OK, fw_last_error() returns a thread-local description.
 */
#ifndef FRACWAVE_H
#define FRACWAVE_H

#include <stddef.h>

#if defined(_WIN32)
#define FW_API __declspec(dllexport)
#else
#define FW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fw_status {
  FW_OK = 0,
  FW_ERR_INVALID_ARGUMENT = 1, /* bad parameter, precondition violated */
  FW_ERR_CAP_EXCEEDED = 2,     /* quadrature node cap hit before tolerance */
  FW_ERR_NO_CONVERGENCE = 3,   /* iteration failed to converge */
  FW_ERR_SOLVE_FAILED = 4,     /* linear solve / factorization failure */
  FW_ERR_DOMAIN = 5,           /* evaluation outside the valid domain */
  FW_ERR_INTERNAL = 6
} fw_status;

FW_API const char* fw_status_name(fw_status s);

/* Message for the most recent failure on this thread. Never NULL. */
FW_API const char* fw_last_error(void);

/* ---- parameters ------------------------------------------------------- */

/* Fractional damper: order alpha in (0,1), tempering eta >= 0, gain gamma. */
typedef struct fw_frac_params {
  double alpha;
  double eta;
  double gamma;
} fw_frac_params;

/* Full system: wave-speed ratio a > 0, coupling b, damper parameters. */
typedef struct fw_system_params {
  double a;
  double b;
  fw_frac_params frac;
} fw_system_params;

/* kappa(alpha) = sin(alpha*pi)/pi */
FW_API double fw_kappa(double alpha);

/* mu(xi) = |xi|^((2*alpha-1)/2); xi must be nonzero. */
FW_API double fw_mu(double xi, double alpha);

/* ---- xi quadrature grid and the diffusive realization ------------------ */

typedef struct fw_xi_grid fw_xi_grid;

/* Build a grid reproducing the transfer identity to target_tol for
 * |lambda| in [lambda_ref/100, 100*lambda_ref] on the real and imaginary
 * axes. Fails with FW_ERR_CAP_EXCEEDED if node_cap (default 4096, pass 0)
 * is hit first. */
FW_API fw_status fw_xi_grid_build(const fw_frac_params* p, double lambda_ref,
                                  double target_tol, fw_xi_grid** out);

/* Same, with an explicit verified sweep band [sweep_lo, sweep_hi]. */
FW_API fw_status fw_xi_grid_build_band(const fw_frac_params* p,
                                       double lambda_ref, double target_tol,
                                       double sweep_lo, double sweep_hi,
                                       int node_cap, fw_xi_grid** out);

FW_API void fw_xi_grid_free(fw_xi_grid* g);
FW_API size_t fw_xi_grid_size(const fw_xi_grid* g);
FW_API fw_status fw_xi_grid_nodes(const fw_xi_grid* g, double* out);
FW_API fw_status fw_xi_grid_weights(const fw_xi_grid* g, double* out);

/* kappa(alpha) * sum_j w_j mu(xi_j)^2 / (lambda + xi_j^2 + eta);
 * analytically (lambda+eta)^(alpha-1). */
FW_API fw_status fw_diffusive_transfer(const fw_xi_grid* g,
                                       const fw_frac_params* p, double re_lam,
                                       double im_lam, double* re_out,
                                       double* im_out);

/* c1, c2 of the resolvent boundary condition; both strictly positive. */
FW_API fw_status fw_c1_c2(const fw_xi_grid* g, const fw_frac_params* p,
                          double lambda, double* c1, double* c2);

/* A1 by quadrature, A2/A3 from closed form, at |lambda| = lambda_abs. */
FW_API fw_status fw_a_integrals(const fw_xi_grid* g, const fw_frac_params* p,
                                double lambda_abs, double* a1, double* a2,
                                double* a3);

/* ---- direct fractional convolutions on uniformly sampled signals ------- */

/* Tempered Caputo derivative of order alpha: product-integration of
 * (1/Gamma(1-alpha)) int_0^t (t-s)^(-alpha) e^(-eta(t-s)) w'(s) ds.
 * values[0..n-1] sampled at t_k = k*dt. out may alias values. */
FW_API fw_status fw_caputo_direct(const double* values, size_t n, double dt,
                                  const fw_frac_params* p, double* out);

/* Tempered fractional integral of order alpha (kernel
 * (t-s)^(alpha-1) e^(-eta(t-s)) / Gamma(alpha)). */
FW_API fw_status fw_frac_integral_direct(const double* values, size_t n,
                                         double dt, const fw_frac_params* p,
                                         double* out);

/* ---- spectrum ----------------------------------------------------------- */

/* Strong-stability scan: first (k1,k2) with 1 <= k1,k2 <= k_max whose
 * exceptional coupling value matches b^2 within 1e-9 relative. */
typedef struct fw_sc_witness {
  int violated;
  int k1, k2;
  double b_exceptional; /* positive root of the exceptional value */
  double lambda_imag;   /* undamped eigenfrequency */
} fw_sc_witness;

FW_API fw_status fw_sc_check(const fw_system_params* p, int k_max,
                             fw_sc_witness* out);

/* Exceptional eigenpair for (k1,k2): coupling b, purely imaginary
 * eigenvalue i*lambda, and the two sine coefficients of the u-profile
 * u(x) = i*(coeff1*sin(k1 pi x) + coeff2*sin(k2 pi x)). */
FW_API fw_status fw_exceptional_eigenpair(double a, int k1, int k2, double* b,
                                          double* lambda, double* coeff1,
                                          double* coeff2);

/* Characteristic functions (overflow-safe scaled evaluation; zeros are the
 * eigenvalues of the generator). fw_char_equal requires a == 1,
 * fw_char_general requires a != 1. */
FW_API fw_status fw_char_equal(const fw_system_params* p, double re_lam,
                               double im_lam, double* re_out, double* im_out);
FW_API fw_status fw_char_general(const fw_system_params* p, double re_lam,
                                 double im_lam, double* re_out,
                                 double* im_out);

/* Closed-form asymptotic eigenvalue for branch (1 or 2), index n with
 * |n| >= 10; the b-case (generic / even / odd multiple of pi) is derived
 * from p->b. */
FW_API fw_status fw_asymptotic_root(const fw_system_params* p, int branch,
                                    long n, double* re_out, double* im_out);

/* Reciprocal of the expansion's remainder order at index n (n^(1-alpha),
 * n^5 in the deep pi-multiple regimes, 1 when a != 1): multiplying
 * |lambda_refined - lambda_asymptotic| by it gives an O(1) quantity. */
FW_API fw_status fw_remainder_scale(const fw_system_params* p, int branch,
                                    long n, double* out);

typedef struct fw_eigen_estimate {
  double re_lambda, im_lambda;
  double re_seed, im_seed;
  double residual;
  int iterations;
  int converged;
} fw_eigen_estimate;

/* Newton refinement seeded at (re_seed, im_seed), safeguarded to stay
 * within pi/2 of the seed. Non-convergence is reported in the estimate,
 * never silently. */
FW_API fw_status fw_refine_root(const fw_system_params* p, double re_seed,
                                double im_seed, double tol, int max_iter,
                                fw_eigen_estimate* out);

typedef struct fw_root_scan fw_root_scan;

/* Refine one branch over n in [n_lo, n_hi] and fit log|Re lambda_n| against
 * log n. Fails if any refinement diverges or fewer than 6 roots converge. */
FW_API fw_status fw_abscissa_scan(const fw_system_params* p, int branch,
                                  long n_lo, long n_hi, double tol,
                                  fw_root_scan** out);
FW_API void fw_root_scan_free(fw_root_scan* s);
FW_API size_t fw_root_scan_size(const fw_root_scan* s);
FW_API fw_status fw_root_scan_get(const fw_root_scan* s, size_t i, long* n,
                                  fw_eigen_estimate* est);
FW_API fw_status fw_root_scan_exponent(const fw_root_scan* s, double* slope);

/* ---- time-domain simulator ---------------------------------------------- */

typedef struct fw_sim fw_sim;
typedef struct fw_trace fw_trace;

/* Assemble the semi-discrete augmented system on n_cells spatial cells,
 * reusing the given xi grid for the diffusive variable. */
FW_API fw_status fw_sim_create(const fw_system_params* p, int n_cells,
                               const fw_xi_grid* g, fw_sim** out);
FW_API void fw_sim_free(fw_sim* s);

/* Crank-Nicolson integration to t_final with step dt, recording energy,
 * boundary dissipation, and the per-step balance residual.
 *
 * initial_data selector:
 *   "zero"                          all fields zero
 *   "u_half_sine"                   u0 = sin(pi x / 2)
 *   "u_three_half_sine"             u0 = sin(3 pi x / 2)
 *   "smooth_mix"                    smooth profile on all four fields
 *   "modal_tail:q=<q>,count=<m>"    velocity data with modal tail m^-q
 *   "random:seed=<s>"               seeded random admissible data
 *   "exceptional:k1=<i>,k2=<j>"     undamped eigenprofile of (k1,k2)
 */
FW_API fw_status fw_sim_run(fw_sim* s, const char* initial_data, double dt,
                            double t_final, fw_trace** out);

FW_API void fw_trace_free(fw_trace* t);
FW_API size_t fw_trace_size(const fw_trace* t);
FW_API fw_status fw_trace_row(const fw_trace* t, size_t i, double* time,
                              double* energy, double* dissipation,
                              double* balance_residual);
/* Run-total and per-step-max balance residual. */
FW_API fw_status fw_trace_balance(const fw_trace* t, double* total,
                                  double* max_step);

/* ---- decay analysis ------------------------------------------------------ */

/* Predicted polynomial decay exponent s(alpha); *defined is 0 when the
 * parameters fall outside the predicted cases. */
FW_API fw_status fw_predicted_exponent(const fw_system_params* p,
                                       double* exponent, int* defined);

typedef struct fw_decay_fit {
  double exponent;
  double stderr_;
  double t_lo, t_hi;
  double r_squared;
} fw_decay_fit;

/* Log-log least squares of the energy trace on [t_lo, t_hi]. */
FW_API fw_status fw_fit_decay_exponent(const fw_trace* t, double t_lo,
                                       double t_hi, fw_decay_fit* out);

/* JSON report linking the spectral abscissa exponent to the predicted and
 * fitted energy decay exponents. scan_params/fit_params are the parameters
 * the scan and the fit were computed with (mismatches are flagged).
 * *out is malloc'd; release with fw_string_free. */
FW_API fw_status fw_report_json(const fw_system_params* p,
                                const fw_root_scan* scan,
                                const fw_system_params* scan_params,
                                const fw_decay_fit* fit,
                                const fw_system_params* fit_params,
                                char** out);

/* ---- invariant verification --------------------------------------------- */

/* Run the built-in invariant suite (transfer identity, convolution oracles,
 * conjugate symmetry, exceptional eigenpair, energy balance). kappa_scale
 * multiplies kappa(alpha) in the transfer check and exists as a mutation
 * hook for tests; pass 1.0 normally. grid_tol is the xi-grid tolerance.
 * *out_json is malloc'd; *all_passed set to 0/1. */
FW_API fw_status fw_verify(const fw_system_params* p, double grid_tol,
                           double kappa_scale, char** out_json,
                           int* all_passed);

FW_API void fw_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRACWAVE_H */
