// Command-line front end: single solves, (F, q0) parameter sweeps with CSV
// output, and tiling construction/verification reports.
//
// Exit codes: 0 success, 2 config error, 3 solver error, 4 verification
// failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "scangame/scenario.hpp"
#include "scangame/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  bool verify = false;
  bool seed_set = false;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--config", opts->config_path, "scenario config file");
  cmd->add_option("--out", opts->out_path, "output file (default stdout)");
  cmd->add_flag("--verify", opts->verify, "run the grid oracle on every solution");
  cmd->add_option("--seed", opts->seed, "RNG seed")->each([opts](const std::string&) {
    opts->seed_set = true;
  });
}

scangame::ScenarioConfig load_config(const CommonOpts& opts, bool sweep_defaults) {
  scangame::ScenarioConfig cfg =
      opts.config_path.empty()
          ? (sweep_defaults ? scangame::default_sweep_scenario() : scangame::default_scenario())
          : scangame::load_scenario(opts.config_path);
  if (opts.verify) cfg.verify = true;
  if (opts.seed_set) cfg.seed = opts.seed;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw scangame::ConfigError("cannot open output file '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scanner-vs-invader spectrum scanning game solver"};
  app.require_subcommand(1);

  CommonOpts solve_opts, sweep_opts, tiling_opts;
  std::string svg_path;
  std::string tiling_x, tiling_y;
  long trials = 0;

  CLI::App* solve = app.add_subcommand("solve", "solve one scenario");
  add_common(solve, &solve_opts);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep F and/or q0, emit CSV");
  add_common(sweep, &sweep_opts);
  sweep->add_option("--svg", svg_path, "write strategy-surface heatmaps to this file");

  CLI::App* tiling = app.add_subcommand("tiling", "build and verify a band tiling");
  tiling->add_option("x", tiling_x, "scanner band width")->required();
  tiling->add_option("y", tiling_y, "invader band width")->required();
  tiling->add_option("--trials", trials, "Monte Carlo trials (0 = skip)");
  add_common(tiling, &tiling_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (solve->parsed()) {
      const scangame::ScenarioConfig cfg = load_config(solve_opts, false);
      std::ostringstream out;
      scangame::run_solve(cfg, out);
      write_output(solve_opts.out_path, out.str());
    } else if (sweep->parsed()) {
      const scangame::ScenarioConfig cfg = load_config(sweep_opts, true);
      if (cfg.sweep.empty())
        throw scangame::ConfigError("sweep expects at least one sweep axis");
      const scangame::SweepResult result = scangame::run_sweep_compute(cfg);
      write_output(sweep_opts.out_path, result.csv());
      if (sweep_opts.out_path.empty())
        std::cerr << result.jump_report();
      else
        write_output(sweep_opts.out_path + ".jumps", result.jump_report());
      if (!svg_path.empty()) write_output(svg_path, result.svg());
    } else if (tiling->parsed()) {
      std::ostringstream out;
      scangame::run_tiling(tiling_x, tiling_y, trials, tiling_opts.seed, out);
      write_output(tiling_opts.out_path, out.str());
    }
  } catch (const scangame::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const scangame::VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
