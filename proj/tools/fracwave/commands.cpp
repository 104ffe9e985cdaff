#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "fracwave.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fwcli {

namespace {

// Lossless round-trip: scientific notation with 17 significant digits.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

struct Failure : std::runtime_error {
  int code;
  Failure(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void check(fw_status s, const std::string& where) {
  if (s != FW_OK)
    throw Failure(s == FW_ERR_INVALID_ARGUMENT ? 2 : 1,
                  where + ": " + fw_status_name(s) + " (" + fw_last_error() +
                      ")");
}

fw_system_params read_params(const Config& cfg) {
  fw_system_params p;
  p.a = cfg.get_double("params.a", 1.0);
  p.b = cfg.get_double("params.b", 1.0);
  p.frac.alpha = cfg.get_double("params.alpha", 0.5);
  p.frac.eta = cfg.get_double("params.eta", 1.0);
  p.frac.gamma = cfg.get_double("params.gamma", 1.0);
  return p;
}

// Common validation; the spectral pipeline additionally needs b != 0 and
// gamma > 0, while the simulator admits the structural limits b = 0 and
// gamma = 0.
void validate_params(const fw_system_params& p, bool spectral) {
  if (!(p.a > 0.0)) throw Failure(2, "invalid config: a must be positive");
  if (!(p.frac.alpha > 0.0 && p.frac.alpha < 1.0))
    throw Failure(2, "invalid config: alpha must lie in (0,1)");
  if (!(p.frac.eta >= 0.0))
    throw Failure(2, "invalid config: eta must be nonnegative");
  if (spectral && p.b == 0.0)
    throw Failure(2, "invalid config: b must be nonzero");
  if (spectral && !(p.frac.gamma > 0.0))
    throw Failure(2, "invalid config: gamma must be positive");
  if (!(p.frac.gamma >= 0.0))
    throw Failure(2, "invalid config: gamma must be nonnegative");
}

class CsvFile {
 public:
  CsvFile(const fs::path& path, const Config& cfg, const std::string& header) {
    out_.open(path);
    if (!out_) throw Failure(1, "cannot write " + path.string());
    for (const auto& line : cfg.lines()) out_ << "# " << line << "\n";
    out_ << header << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i)
      out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
  }

 private:
  std::ofstream out_;
};

void write_json(const fs::path& path, const Config& cfg, json j) {
  json cfg_echo = json::array();
  for (const auto& line : cfg.lines()) cfg_echo.push_back(line);
  j["config"] = cfg_echo;
  std::ofstream out(path);
  if (!out) throw Failure(1, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

using GridPtr = std::unique_ptr<fw_xi_grid, decltype(&fw_xi_grid_free)>;
using ScanPtr = std::unique_ptr<fw_root_scan, decltype(&fw_root_scan_free)>;
using SimPtr = std::unique_ptr<fw_sim, decltype(&fw_sim_free)>;
using TracePtr = std::unique_ptr<fw_trace, decltype(&fw_trace_free)>;

int run_spectrum(const Config& cfg, const fs::path& dir) {
  fw_system_params p = read_params(cfg);
  validate_params(p, true);
  const long n_lo = cfg.get_long("spectrum.n_lo", 20);
  const long n_hi = cfg.get_long("spectrum.n_hi", 200);
  const double tol = cfg.get_double("spectrum.refine_tol", 1e-10);
  const int k_max = static_cast<int>(cfg.get_long("spectrum.k_max", 50));
  const std::string branch_sel = cfg.get("spectrum.branch", "1");

  fw_sc_witness w;
  check(fw_sc_check(&p, k_max, &w), "sc_check");
  if (w.violated) {
    write_json(dir / "stability_report.json", cfg,
               json{{"strong_stability", false},
                    {"k1", w.k1},
                    {"k2", w.k2},
                    {"b_exceptional", w.b_exceptional},
                    {"lambda_imag", w.lambda_imag}});
    std::cerr << "strong stability violated: b matches the exceptional value "
                 "of (k1,k2) = ("
              << w.k1 << "," << w.k2 << "), undamped frequency "
              << w.lambda_imag << "\n";
    return 3;
  }

  std::vector<int> branches;
  if (branch_sel == "both") branches = {1, 2};
  else if (branch_sel == "1" || branch_sel == "2") branches = {std::stoi(branch_sel)};
  else throw Failure(2, "spectrum.branch must be 1, 2 or both");

  CsvFile roots(dir / "roots.csv", cfg,
                "branch,n,re_lambda,im_lambda,re_seed,im_seed,residual,"
                "iterations");
  json fits = json::array();
  for (int branch : branches) {
    ScanPtr scan(nullptr, fw_root_scan_free);
    {
      fw_root_scan* raw = nullptr;
      check(fw_abscissa_scan(&p, branch, n_lo, n_hi, tol, &raw),
            "abscissa_scan");
      scan.reset(raw);
    }
    const std::string cmp_name = branches.size() == 1
                                     ? "asymptotic_comparison.csv"
                                     : "asymptotic_comparison_branch" +
                                           std::to_string(branch) + ".csv";
    CsvFile cmp(dir / cmp_name, cfg, "n,abs_diff,scaled_residual");
    for (size_t i = 0; i < fw_root_scan_size(scan.get()); ++i) {
      long n = 0;
      fw_eigen_estimate est;
      check(fw_root_scan_get(scan.get(), i, &n, &est), "root_scan_get");
      roots.row({std::to_string(branch), std::to_string(n), num(est.re_lambda),
                 num(est.im_lambda), num(est.re_seed), num(est.im_seed),
                 num(est.residual), std::to_string(est.iterations)});
      const double dre = est.re_lambda - est.re_seed;
      const double dim = est.im_lambda - est.im_seed;
      const double diff = std::hypot(dre, dim);
      double scale = 1.0;
      check(fw_remainder_scale(&p, branch, n, &scale), "remainder_scale");
      cmp.row({std::to_string(n), num(diff), num(diff * scale)});
    }
    double slope = 0.0;
    check(fw_root_scan_exponent(scan.get(), &slope), "scan_exponent");
    fits.push_back(json{{"branch", branch},
                        {"n_lo", n_lo},
                        {"n_hi", n_hi},
                        {"slope", slope},
                        {"abscissa_exponent", -slope}});
  }
  write_json(dir / "abscissa_fit.json", cfg, json{{"fits", fits}});
  return 0;
}

int run_simulate(const Config& cfg, const fs::path& dir) {
  fw_system_params p = read_params(cfg);
  validate_params(p, false);
  const int n_cells = static_cast<int>(cfg.get_long("simulate.n_cells", 200));
  const double dt_factor = cfg.get_double("simulate.dt_factor", 0.5);
  const double t_final = cfg.get_double("simulate.t_final", 100.0);
  const double grid_tol = cfg.get_double("simulate.grid_tol", 1e-8);
  const std::string init = cfg.get("simulate.initial_data", "smooth_mix");
  const long stride = cfg.get_long("simulate.trace_stride", 1);
  const long plot_stride = cfg.get_long("simulate.plot_stride", 0);
  const double h = 1.0 / n_cells;
  const double dt = h * dt_factor;

  GridPtr grid(nullptr, fw_xi_grid_free);
  {
    fw_xi_grid* raw = nullptr;
    // xi grid tuned around the dominant temporal frequency pi*n_cells.
    check(fw_xi_grid_build(&p.frac, M_PI * n_cells, grid_tol, &raw),
          "xi_grid_build");
    grid.reset(raw);
  }
  SimPtr sim(nullptr, fw_sim_free);
  {
    fw_sim* raw = nullptr;
    check(fw_sim_create(&p, n_cells, grid.get(), &raw), "sim_create");
    sim.reset(raw);
  }
  TracePtr trace(nullptr, fw_trace_free);
  {
    fw_trace* raw = nullptr;
    check(fw_sim_run(sim.get(), init.c_str(), dt, t_final, &raw), "sim_run");
    trace.reset(raw);
  }

  const size_t rows = fw_trace_size(trace.get());
  CsvFile tr(dir / "trace.csv", cfg, "t,energy,dissipation,balance_residual");
  double e0 = 0.0, e_end = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    double t, e, d, r;
    check(fw_trace_row(trace.get(), i, &t, &e, &d, &r), "trace_row");
    if (i == 0) e0 = e;
    if (i + 1 == rows) e_end = e;
    if (i % stride == 0 || i + 1 == rows)
      tr.row({num(t), num(e), num(d), num(r)});
  }
  if (plot_stride > 0) {
    CsvFile plot(dir / "plot_data.csv", cfg, "t,log_t,log_energy");
    for (size_t i = 0; i < rows; i += plot_stride) {
      double t, e, d, r;
      check(fw_trace_row(trace.get(), i, &t, &e, &d, &r), "trace_row");
      if (t > 0.0 && e > 0.0) plot.row({num(t), num(std::log(t)), num(std::log(e))});
    }
  }

  json fit_json;
  bool fitted = false;
  fw_decay_fit fit{};
  if (p.frac.gamma == 0.0) {
    const double drift = e0 > 0.0 ? std::abs(e_end - e0) / e0 : 0.0;
    fit_json = json{{"fitted", false},
                    {"reason", "gamma = 0: conservative run, no decay fit"},
                    {"conservation", json{{"energy_initial", e0},
                                          {"energy_final", e_end},
                                          {"relative_drift", drift}}}};
  } else {
    const double t_lo = cfg.get_double("simulate.fit_t_lo", t_final / 4.0);
    const double t_hi = cfg.get_double("simulate.fit_t_hi", t_final);
    const fw_status s = fw_fit_decay_exponent(trace.get(), t_lo, t_hi, &fit);
    if (s == FW_OK) {
      fitted = true;
      fit_json = json{{"fitted", true},
                      {"exponent", fit.exponent},
                      {"stderr", fit.stderr_},
                      {"window", {fit.t_lo, fit.t_hi}},
                      {"r_squared", fit.r_squared},
                      {"pre_asymptotic_window", fit.r_squared < 0.98}};
    } else {
      fit_json = json{{"fitted", false}, {"reason", fw_last_error()}};
    }
  }
  fit_json["energy_initial"] = e0;
  fit_json["energy_final"] = e_end;
  write_json(dir / "decay_fit.json", cfg, fit_json);

  // Cross-validation against the spectrum: abscissa scan on the branch that
  // sets the decay exponent, reported next to the fitted one.
  if (fitted && cfg.get_long("simulate.spectral_report", 1) != 0 &&
      p.b != 0.0) {
    // branch 2 carries the slow n^-(5-alpha) scaling for odd pi-multiples
    const double k = std::round(p.b / M_PI);
    const bool odd_pi = k != 0.0 && std::abs(p.b / M_PI - k) <= 1e-9 &&
                        static_cast<long long>(k) % 2 != 0;
    const int branch =
        static_cast<int>(cfg.get_long("simulate.report_branch", odd_pi ? 2 : 1));
    const long n_lo = cfg.get_long("simulate.report_n_lo", 20);
    const long n_hi = cfg.get_long("simulate.report_n_hi", 200);
    fw_root_scan* raw = nullptr;
    if (fw_abscissa_scan(&p, branch, n_lo, n_hi, 1e-10, &raw) == FW_OK) {
      ScanPtr scan(raw, fw_root_scan_free);
      char* rep = nullptr;
      check(fw_report_json(&p, scan.get(), &p, &fit, &p, &rep), "report_json");
      std::ofstream out(dir / "spectral_energy_report.json");
      out << rep << "\n";
      fw_string_free(rep);
    } else {
      std::cerr << "spectral report skipped: " << fw_last_error() << "\n";
    }
  }
  return 0;
}

int run_verify(const Config& cfg, const fs::path& dir) {
  fw_system_params p = read_params(cfg);
  validate_params(p, true);
  const double grid_tol = cfg.get_double("verify.grid_tol", 1e-6);
  const double kappa_scale = cfg.get_double("verify.kappa_scale", 1.0);
  char* out_json = nullptr;
  int ok = 0;
  check(fw_verify(&p, grid_tol, kappa_scale, &out_json, &ok), "verify");
  const json report = json::parse(out_json);
  fw_string_free(out_json);
  for (const auto& c : report["checks"]) {
    const std::string status = c["skipped"].get<bool>() ? "SKIP"
                               : c["passed"].get<bool>() ? "PASS"
                                                         : "FAIL";
    std::cout << status << " " << c["name"].get<std::string>() << ": "
              << c["detail"].get<std::string>() << "\n";
  }
  write_json(dir / "verify_report.json", cfg, report);
  return ok ? 0 : 1;
}

int run_sweep(const Config& cfg, const fs::path& dir) {
  const std::string command = cfg.get("sweep.command", "spectrum");
  const std::string vary = cfg.get("sweep.vary", "");
  const std::string values = cfg.get("sweep.values", "");
  const long workers = std::max(1L, cfg.get_long("sweep.workers", 4));
  if (vary.empty() || values.empty())
    throw Failure(2, "sweep needs sweep.vary and sweep.values");
  if (command != "spectrum" && command != "simulate")
    throw Failure(2, "sweep.command must be spectrum or simulate");

  std::vector<std::string> vals;
  std::stringstream ss(values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) vals.push_back(item.substr(b, e - b + 1));
  }
  if (vals.empty()) throw Failure(2, "sweep.values is empty");

  struct Job {
    std::string value;
    fs::path dir;
    int code = -1;
  };
  std::vector<Job> jobs;
  for (const auto& v : vals) {
    std::string tag = v;
    for (auto& ch : tag)
      if (ch == '.' || ch == '-' || ch == '+') ch = '_';
    jobs.push_back({v, dir / ("sweep_" + vary + "_" + tag)});
  }
  auto worker = [&](size_t i) {
    Config sub = cfg;
    sub.set("params." + vary, jobs[i].value);
    fs::create_directories(jobs[i].dir);
    try {
      jobs[i].code = command == "spectrum" ? run_spectrum(sub, jobs[i].dir)
                                           : run_simulate(sub, jobs[i].dir);
    } catch (const Failure& f) {
      std::cerr << "sweep value " << jobs[i].value << ": " << f.what() << "\n";
      jobs[i].code = f.code;
    }
  };
  std::vector<std::future<void>> pending;
  for (size_t i = 0; i < jobs.size(); ++i) {
    pending.push_back(std::async(std::launch::async, worker, i));
    if (pending.size() >= static_cast<size_t>(workers)) {
      pending.front().wait();
      pending.erase(pending.begin());
    }
  }
  for (auto& f : pending) f.wait();

  json summary = json::array();
  int rc = 0;
  for (const auto& j : jobs) {
    summary.push_back(json{{"value", j.value},
                           {"dir", j.dir.filename().string()},
                           {"exit_code", j.code}});
    if (j.code != 0) rc = 1;
  }
  write_json(dir / "sweep_summary.json", cfg,
             json{{"command", command}, {"vary", vary}, {"runs", summary}});
  return rc;
}

int dispatch(const std::function<int(const Config&, const fs::path&)>& fn,
             const Config& cfg, const std::string& out_dir) {
  try {
    fs::path dir(out_dir.empty() ? "." : out_dir);
    fs::create_directories(dir);
    return fn(cfg, dir);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.what() << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int cmd_spectrum(const Config& cfg, const std::string& out_dir) {
  return dispatch(run_spectrum, cfg, out_dir);
}
int cmd_simulate(const Config& cfg, const std::string& out_dir) {
  return dispatch(run_simulate, cfg, out_dir);
}
int cmd_verify(const Config& cfg, const std::string& out_dir) {
  return dispatch(run_verify, cfg, out_dir);
}
int cmd_sweep(const Config& cfg, const std::string& out_dir) {
  return dispatch(run_sweep, cfg, out_dir);
}

}  // namespace fwcli
