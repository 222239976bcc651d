#ifndef GODRAD_IO_HPP_
#define GODRAD_IO_HPP_
//========================================================================================
//! \file io.hpp
//! \brief Run configuration (flat key = value) and CSV / table writers.
//!
//! Config keys (the CLI flags use the same names with a leading --):
//!   problem, ncell, ladder, cfl, dt-mode, tfinal, outputs, wave-speeds,
//!   reconstruction, limiting, bc, out-dir, cc, sigma-a, sigma-t, f, temperature
//! Underscores and dashes are interchangeable in keys. Lists are comma separated.
//========================================================================================

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "godrad/analysis.hpp"
#include "godrad/problems.hpp"
#include "godrad/timestepper.hpp"

namespace godrad {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

//! Parse "key = value" lines; '#' starts a comment. Throws ConfigError on malformed lines.
KeyValues parse_key_values(std::istream& in);
KeyValues load_key_values(const std::filesystem::path& path);

//! Raw settings before they are checked against a problem's defaults.
struct RunConfig {
  std::string problem;
  std::optional<std::size_t> ncell;
  std::vector<std::size_t> ladder;
  std::optional<double> cfl;
  std::optional<DtMode> dt_mode;
  std::optional<double> t_final;
  std::vector<double> outputs;
  WaveSpeeds wave_speeds = WaveSpeeds::effective;
  Reconstruction reconstruction = Reconstruction::plm;
  SlopeLimiting limiting = SlopeLimiting::conserved;
  std::optional<BoundaryKind> bc;
  std::filesystem::path out_dir = "out";
  std::optional<double> cc, sigma_a, sigma_t, f, temperature;

  //! Apply one setting. Throws ConfigError for unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);
  void apply(const KeyValues& kv);
};

//! A fully resolved, validated run.
struct ResolvedRun {
  ProblemSpec spec;
  StepControl control;
  SolverOptions options;
  std::size_t n_cell = 0;
  std::vector<std::size_t> ladder;
  std::vector<double> outputs;  // strictly increasing, last one equals control.t_final
};

ResolvedRun resolve(const RunConfig& cfg);

//! Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

//! Snapshot CSV: '#' metadata lines, a header, then x,e_r,f_r[,e_ref,f_ref].
void write_snapshot(std::ostream& out, const ResolvedRun& run, const GridField& grid,
                    double time);

//! Machine-readable convergence table, one row per resolution.
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);

//! Aligned text rendering in the layout N_cell | L1(E_r) | Rate | Linf(E_r) | Rate | ...
void render_convergence_table(std::ostream& out, const ConvergenceReport& report);

}  // namespace godrad

#endif  // GODRAD_IO_HPP_
