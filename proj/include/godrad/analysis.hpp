#ifndef GODRAD_ANALYSIS_HPP_
#define GODRAD_ANALYSIS_HPP_
//========================================================================================
//! \file analysis.hpp
//! \brief Error norms, factor-two restriction and Richardson convergence rates.
//!
//!   L1   = sum_i |e_i| dx
//!   Linf = max_i |e_i|
//!   R    = ln(L^r / L^{r+1}) / ln(dx^r / dx^{r+1})
//!
//! Analytic comparison measures e_i = q_i - u(x_i, t). Self-similar comparison measures
//! e_i = q^r_i - (restricted q^{r+1})_i, so every row needs the next finer run; the
//! sweep performs one extra run at twice the finest ladder resolution for that.
//========================================================================================

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "godrad/core.hpp"
#include "godrad/problems.hpp"
#include "godrad/timestepper.hpp"

namespace godrad {

struct Norms {
  double l1 = 0.0;
  double linf = 0.0;
};

struct StateNorms {
  Norms e_r;
  Norms f_r;
};

//! Norms of q - ref over the interior of q. Throws std::invalid_argument on size mismatch.
StateNorms error_norms(const GridField& q, std::span<const ConservedState> ref);

//! Coarse grid whose cell i averages fine cells 2i and 2i + 1. Throws on odd n_cell.
GridField restrict_grid(const GridField& fine);

//! Richardson rate; nullopt unless both norms are positive and dx_ratio > 1.
std::optional<double> richardson_rate(double l_coarse, double l_fine, double dx_ratio);

struct RateSet {
  std::optional<double> e_l1, e_linf, f_l1, f_linf;
};

struct ConvergenceRow {
  std::size_t n_cell = 0;
  StateNorms norms;
  RateSet rates;  // empty on the first row
  long steps = 0;
  bool negative_energy = false;
};

struct ConvergenceReport {
  std::string problem;
  Comparison comparison = Comparison::analytic;
  double t_final = 0.0;
  DtMode dt_mode = DtMode::hyperbolic;
  std::vector<ConvergenceRow> rows;
};

//! Final-time grid and step diagnostics of one run.
struct RunResult {
  GridField grid;
  RunDiagnostics diagnostics;
};

RunResult run_problem(const ProblemSpec& spec, std::size_t n_cell, const StepControl& ctrl,
                      const SolverOptions& opts);

//! Run the resolution ladder and tabulate errors and rates. The ladder must be strictly
//! increasing, and in self-similar mode each entry must double the previous one.
//! Solver failures are rethrown as NumericalError annotated with the resolution.
ConvergenceReport run_convergence(const ProblemSpec& spec,
                                  const std::vector<std::size_t>& resolutions,
                                  const StepControl& ctrl, const SolverOptions& opts);

}  // namespace godrad

#endif  // GODRAD_ANALYSIS_HPP_
