//! \file analysis.cpp
//! \brief Norms, restriction and the convergence sweep driver.

#include "godrad/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

namespace godrad {

StateNorms error_norms(const GridField& q, std::span<const ConservedState> ref) {
  if (ref.size() != q.n_cell())
    throw std::invalid_argument("error_norms: reference has " + std::to_string(ref.size()) +
                                " cells, grid has " + std::to_string(q.n_cell()));
  StateNorms n;
  for (std::size_t i = 0; i < q.n_cell(); ++i) {
    const double de = std::abs(q[i].e_r - ref[i].e_r);
    const double df = std::abs(q[i].f_r - ref[i].f_r);
    n.e_r.l1 += de;
    n.f_r.l1 += df;
    n.e_r.linf = std::max(n.e_r.linf, de);
    n.f_r.linf = std::max(n.f_r.linf, df);
  }
  n.e_r.l1 *= q.dx();
  n.f_r.l1 *= q.dx();
  return n;
}

GridField restrict_grid(const GridField& fine) {
  if (fine.n_cell() % 2 != 0)
    throw std::invalid_argument("restrict_grid: fine grid has an odd cell count");
  GridField coarse(fine.n_cell() / 2, fine.x_min(), fine.x_max(), fine.n_ghost());
  for (std::size_t i = 0; i < coarse.n_cell(); ++i)
    coarse[i] = 0.5 * (fine[2 * i] + fine[2 * i + 1]);
  return coarse;
}

std::optional<double> richardson_rate(double l_coarse, double l_fine, double dx_ratio) {
  if (!(l_coarse > 0.0) || !(l_fine > 0.0) || !(dx_ratio > 1.0)) return std::nullopt;
  return std::log(l_coarse / l_fine) / std::log(dx_ratio);
}

RunResult run_problem(const ProblemSpec& spec, std::size_t n_cell, const StepControl& ctrl,
                      const SolverOptions& opts) {
  ProblemSetup setup = init(spec, n_cell);
  Stepper stepper(std::move(setup.params), opts);
  RunDiagnostics diag = stepper.advance(setup.grid, ctrl);
  return {std::move(setup.grid), std::move(diag)};
}

namespace {

RateSet rates_between(const StateNorms& coarse, const StateNorms& fine, double ratio) {
  return {richardson_rate(coarse.e_r.l1, fine.e_r.l1, ratio),
          richardson_rate(coarse.e_r.linf, fine.e_r.linf, ratio),
          richardson_rate(coarse.f_r.l1, fine.f_r.l1, ratio),
          richardson_rate(coarse.f_r.linf, fine.f_r.linf, ratio)};
}

}  // namespace

ConvergenceReport run_convergence(const ProblemSpec& spec,
                                  const std::vector<std::size_t>& resolutions,
                                  const StepControl& ctrl, const SolverOptions& opts) {
  if (resolutions.empty()) throw ConfigError("resolution ladder is empty");
  for (std::size_t r = 0; r < resolutions.size(); ++r) {
    if (resolutions[r] == 0) throw ConfigError("resolutions must be positive");
    if (r > 0 && resolutions[r] <= resolutions[r - 1])
      throw ConfigError("resolution ladder must be strictly increasing");
    if (spec.comparison == Comparison::self_similar && r > 0 &&
        resolutions[r] != 2 * resolutions[r - 1])
      throw ConfigError("self-similar comparison needs a ladder that doubles each step");
  }

  std::vector<std::size_t> runs = resolutions;
  if (spec.comparison == Comparison::self_similar) runs.push_back(2 * resolutions.back());

  std::vector<std::future<RunResult>> pending;
  for (std::size_t n : runs) {
    pending.push_back(std::async(std::launch::async, [&spec, &ctrl, &opts, n] {
      try {
        return run_problem(spec, n, ctrl, opts);
      } catch (const NumericalError& e) {
        throw NumericalError("n_cell = " + std::to_string(n) + ": " + e.what(), e.step(),
                             e.cell());
      }
    }));
  }
  std::vector<RunResult> results;
  for (auto& f : pending) results.push_back(f.get());

  ConvergenceReport report;
  report.problem = spec.name;
  report.comparison = spec.comparison;
  report.t_final = ctrl.t_final;
  report.dt_mode = ctrl.mode;

  for (std::size_t r = 0; r < resolutions.size(); ++r) {
    const GridField& q = results[r].grid;
    ConvergenceRow row;
    row.n_cell = resolutions[r];
    row.steps = results[r].diagnostics.steps;
    row.negative_energy = results[r].diagnostics.negative_energy;
    if (spec.comparison == Comparison::analytic) {
      const auto ref = reference_on(spec, q, ctrl.t_final);
      if (!ref) throw ConfigError("problem '" + spec.name + "' has no analytic reference");
      row.norms = error_norms(q, *ref);
    } else {
      const GridField coarse = restrict_grid(results[r + 1].grid);
      row.norms = error_norms(q, coarse.interior());
    }
    if (r > 0) {
      const double ratio =
          static_cast<double>(resolutions[r]) / static_cast<double>(resolutions[r - 1]);
      row.rates = rates_between(report.rows.back().norms, row.norms, ratio);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace godrad
