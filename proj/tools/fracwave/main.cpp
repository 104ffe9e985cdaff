// fracwave CLI: batch front end over the fracwave C API.
//
//   fracwave spectrum --config exp.ini [--out dir]
//   fracwave simulate --config exp.ini [--out dir]
//   fracwave verify   --config exp.ini [--out dir]
//   fracwave sweep    --config exp.ini [--out dir]
//
// FRACWAVE_OUT overrides the output directory.

#include <CLI11.hpp>
#include <cstdlib>
#include <string>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coupled wave equations with one fractional boundary damper"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config (INI)")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
  };
  auto* sp = app.add_subcommand("spectrum", "characteristic roots, asymptotics, abscissa fit");
  auto* si = app.add_subcommand("simulate", "time-domain run with energy trace and decay fit");
  auto* ve = app.add_subcommand("verify", "run the invariant suite");
  auto* sw = app.add_subcommand("sweep", "fan a command out over a parameter list");
  for (auto* sub : {sp, si, ve, sw}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("FRACWAVE_OUT"))
    if (*env) out_dir = env;

  fwcli::Config cfg;
  try {
    cfg = fwcli::Config::load(config_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  if (sp->parsed()) return fwcli::cmd_spectrum(cfg, out_dir);
  if (si->parsed()) return fwcli::cmd_simulate(cfg, out_dir);
  if (ve->parsed()) return fwcli::cmd_verify(cfg, out_dir);
  if (sw->parsed()) return fwcli::cmd_sweep(cfg, out_dir);
  return 2;
}
