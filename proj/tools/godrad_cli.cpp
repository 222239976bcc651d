//! \file godrad_cli.cpp
//! \brief Command-line driver: single runs with CSV snapshots, and convergence sweeps.
//!
//!   godrad run         --problem weak_diffusion --ncell 2560 --outputs 2.5e-7,1e-6,4e-6
//!   godrad convergence --problem exp_relax_growth
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "godrad/analysis.hpp"
#include "godrad/io.hpp"

namespace fs = std::filesystem;
using namespace godrad;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Settings {
  std::string config_file;
  KeyValues overrides;
};

void add_settings(CLI::App* cmd, Settings& s) {
  cmd->add_option("--config", s.config_file, "flat key = value config file")
      ->check(CLI::ExistingFile);
  struct Flag {
    const char* name;
    const char* help;
  };
  static constexpr Flag flags[] = {
      {"problem", "problem name"},
      {"ncell", "number of interior cells (run)"},
      {"ladder", "comma separated resolutions (convergence)"},
      {"cfl", "Courant number in (0, 1]"},
      {"dt-mode", "hyperbolic | parabolic"},
      {"tfinal", "stop time"},
      {"outputs", "comma separated snapshot times (run)"},
      {"wave-speeds", "effective | plain"},
      {"reconstruction", "plm | pcm"},
      {"limiting", "conserved | characteristic"},
      {"bc", "outflow | periodic"},
      {"out-dir", "output directory"},
      {"cc", "light-to-sound speed ratio"},
      {"sigma-a", "absorption cross section"},
      {"sigma-t", "total cross section"},
      {"f", "Eddington factor"},
      {"temperature", "material temperature (uniform or Gaussian peak)"},
  };
  for (const Flag& fl : flags) {
    const std::string key = fl.name;
    cmd->add_option_function<std::string>(
        "--" + key, [&s, key](const std::string& v) { s.overrides.emplace_back(key, v); },
        fl.help);
  }
}

RunConfig load(const Settings& s) {
  RunConfig cfg;
  if (!s.config_file.empty()) cfg.apply(load_key_values(s.config_file));
  cfg.apply(s.overrides);
  return cfg;
}

void write_file(const fs::path& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

int run_single(const Settings& s) {
  const RunConfig cfg = load(s);
  const ResolvedRun run = resolve(cfg);
  const fs::path dir = cfg.out_dir / run.spec.name / std::to_string(run.n_cell);
  fs::create_directories(dir);

  ProblemSetup setup = init(run.spec, run.n_cell);
  Stepper stepper(std::move(setup.params), run.options);

  const auto start = std::chrono::steady_clock::now();
  double time = 0.0;
  long steps = 0;
  bool negative = false;
  double min_e = setup.grid[0].e_r, max_e = setup.grid[0].e_r;
  for (std::size_t k = 0; k < run.outputs.size(); ++k) {
    StepControl ctrl = run.control;
    ctrl.t_final = run.outputs[k];
    const RunDiagnostics diag = stepper.advance(setup.grid, ctrl, time, steps);
    time = diag.time;
    steps += diag.steps;
    negative = negative || diag.negative_energy;
    for (const auto& rec : diag.records) {
      min_e = std::min(min_e, rec.min_e_r);
      max_e = std::max(max_e, rec.max_e_r);
    }
    write_file(dir / ("snapshot_" + std::to_string(k) + ".csv"),
               [&](std::ostream& out) { write_snapshot(out, run, setup.grid, time); });
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_file(dir / "summary.txt", [&](std::ostream& out) {
    out << "problem = " << run.spec.name << '\n'
        << "ncell = " << run.n_cell << '\n'
        << "t_final = " << format_double(time) << '\n'
        << "steps = " << steps << '\n'
        << "snapshots = " << run.outputs.size() << '\n'
        << "min_e_r = " << format_double(min_e) << '\n'
        << "max_e_r = " << format_double(max_e) << '\n'
        << "negative_e_r = " << (negative ? "yes" : "no") << '\n'
        << "wall_seconds = " << format_double(wall) << '\n';
  });
  std::printf("%s: %ld steps to t = %s, %zu snapshot(s) in %s\n", run.spec.name.c_str(),
              steps, format_double(time).c_str(), run.outputs.size(), dir.c_str());
  return 0;
}

int run_convergence_cmd(const Settings& s) {
  const RunConfig cfg = load(s);
  const ResolvedRun run = resolve(cfg);
  const ConvergenceReport report =
      run_convergence(run.spec, run.ladder, run.control, run.options);

  const fs::path dir = cfg.out_dir / run.spec.name;
  fs::create_directories(dir);
  write_file(dir / "convergence.csv",
             [&](std::ostream& out) { write_convergence_csv(out, report); });
  write_file(dir / "convergence.txt",
             [&](std::ostream& out) { render_convergence_table(out, report); });
  render_convergence_table(std::cout, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order Godunov solver for the radiation subsystem"};
  app.require_subcommand(1);

  Settings run_settings, conv_settings;
  CLI::App* run_cmd = app.add_subcommand("run", "run one problem and write CSV snapshots");
  CLI::App* conv_cmd =
      app.add_subcommand("convergence", "run a resolution ladder and tabulate rates");
  add_settings(run_cmd, run_settings);
  add_settings(conv_cmd, conv_settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run_cmd->parsed()) return run_single(run_settings);
    return run_convergence_cmd(conv_settings);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
