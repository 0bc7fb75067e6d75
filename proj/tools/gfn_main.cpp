// gfn_main.cpp
//
// gfn simulate|analytic|propagate|wick --config <path> [--out <dir>]
//                                      [--seed <u64>] [--jobs <n>]

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gfn/commands.hpp"
#include "gfn/config.hpp"

namespace {

int resolve_jobs(int cli_jobs) {
  if (cli_jobs > 0) return cli_jobs;
  if (const char* env = std::getenv("GFN_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::fprintf(stderr, "warning: ignoring malformed GFN_JOBS='%s'\n", env);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stochastic free scalar field on a momentum lattice"};
  app.set_version_flag("--version", gfn::version_string());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 0;

  const char* names[] = {"simulate", "analytic", "propagate", "wick"};
  const char* descs[] = {
      "Monte Carlo correlators vs the finite-volume analytic values",
      "tabulate two-point and N-point functions (closed form vs quadrature)",
      "causal propagator, conjugation and boost-invariance residuals",
      "list Wick pairings and verify the (N-1)!! count"};
  for (int i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--config", config_path, "run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory (default .)");
    sub->add_option("--seed", seed, "override [rng] master_seed");
    sub->add_option("--jobs", jobs,
                    "worker threads (default $GFN_JOBS, then 1)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/version or the usage error
    return code == 0 ? 0 : 2;
  }
  CLI::App* active = app.get_subcommands().front();
  seed_given = active->count("--seed") > 0;

  try {
    gfn::RunConfig cfg = gfn::parse_config(config_path);
    if (seed_given) cfg.policy.master_seed = seed;
    cfg.ensemble.jobs = resolve_jobs(jobs);

    if (app.got_subcommand("simulate")) return gfn::run_simulate(cfg, out_dir);
    if (app.got_subcommand("analytic")) return gfn::run_analytic(cfg, out_dir);
    if (app.got_subcommand("propagate")) return gfn::run_propagate(cfg, out_dir);
    return gfn::run_wick(cfg, out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
