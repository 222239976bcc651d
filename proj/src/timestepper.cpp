//! \file timestepper.cpp
//! \brief Time-step selection, flux divergence and the Picard corrector.

#include "godrad/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace godrad {

DtMode parse_dt_mode(std::string_view name) {
  if (name == "hyperbolic") return DtMode::hyperbolic;
  if (name == "parabolic") return DtMode::parabolic;
  throw ConfigError("unknown dt mode '" + std::string(name) + "'");
}

std::string_view to_string(DtMode mode) {
  return mode == DtMode::hyperbolic ? "hyperbolic" : "parabolic";
}

double nominal_dt(const StepControl& ctrl, double dx, const PhysParams& p) {
  if (!(ctrl.cfl > 0.0 && ctrl.cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  double dt = 0.0;
  if (ctrl.mode == DtMode::hyperbolic) {
    dt = ctrl.cfl * dx / p.frozen_speed();
  } else {
    if (!(p.sigma_t > 0.0)) throw ConfigError("parabolic time step needs sigma_t > 0");
    dt = ctrl.cfl * dx * dx / (2.0 * p.diffusion_coefficient());
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time step is not positive");
  return dt;
}

double select_dt(const StepControl& ctrl, const GridField& grid, const PhysParams& p,
                 double t_now) {
  if (!(t_now < ctrl.t_final)) throw ConfigError("t_now must be before t_final");
  const double dt = nominal_dt(ctrl, grid.dx(), p);
  const double remaining = ctrl.t_final - t_now;
  // a remainder within round-off of one step is taken as that step
  if (remaining <= dt * (1.0 + 1e-10)) return remaining;
  return dt;
}

std::vector<ConservedState> flux_divergence(const GridField& grid,
                                            const EffectiveEigensystem& es,
                                            const PhysParams& p, std::span<const double> t4,
                                            double dt, const SolverOptions& opts) {
  const FaceStates faces = predict_face_states(grid, es, p, t4, dt, opts.reconstruction);
  const std::size_t n = grid.n_cell();
  std::vector<ConservedState> face_flux(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    face_flux[k] = hlle_flux(faces.left[k], faces.right[k], es, p, opts.wave_speeds);

  const double idx = 1.0 / grid.dx();
  std::vector<ConservedState> div(n);
  for (std::size_t i = 0; i < n; ++i) div[i] = idx * (face_flux[i + 1] - face_flux[i]);
  return div;
}

namespace {

// (I - dt dS/dU)^{-1}; dS/dU does not depend on the state
Matrix2 implicit_inverse(const PhysParams& p, double dt) {
  return Matrix2::diag(1.0 / (1.0 + dt * p.cc * p.sigma_a),
                       1.0 / (1.0 + dt * p.cc * p.sigma_t));
}

}  // namespace

ConservedState corrector_guess(const ConservedState& u_n, const ConservedState& div,
                               double t4, const PhysParams& p, double dt) {
  return u_n + dt * (implicit_inverse(p, dt) * (source(u_n, t4, p) - div));
}

ConservedState corrector_update(const ConservedState& u_n, const ConservedState& u_hat,
                                const ConservedState& div, double t4, const PhysParams& p,
                                double dt) {
  const ConservedState eps = u_n + (0.5 * dt) * (source(u_hat, t4, p) + source(u_n, t4, p)) -
                             dt * div - u_hat;
  return u_hat + implicit_inverse(p, dt) * eps;
}

Stepper::Stepper(PhysParams params, SolverOptions opts)
    : params_(std::move(params)), opts_(opts) {
  params_.validate();
}

void Stepper::prepare(GridField& grid) {
  fill_boundary(grid, opts_.bc);
  const std::size_t ng = grid.n_ghost();
  t4_.resize(grid.n_total());
  switch (params_.temp.kind) {
    case TemperatureKind::uniform:
      std::fill(t4_.begin(), t4_.end(), params_.temp.t4_uniform);
      break;
    case TemperatureKind::field:
      if (params_.temp.t4_field.size() != grid.n_cell())
        throw ConfigError("T^4 field size does not match the grid");
      std::copy(params_.temp.t4_field.begin(), params_.temp.t4_field.end(),
                t4_.begin() + static_cast<long>(ng));
      fill_ghosts(std::span<double>(t4_), ng, opts_.bc);
      break;
    case TemperatureKind::radiation_equilibrium:
      for (std::size_t k = 0; k < grid.n_total(); ++k) t4_[k] = grid.raw(k).e_r;
      break;
  }
}

StepRecord Stepper::step(GridField& grid, double dt, long step_index) {
  prepare(grid);
  const EffectiveEigensystem es = build_effective(params_, dt);
  const std::vector<ConservedState> div = flux_divergence(grid, es, params_, t4_, dt, opts_);

  const std::size_t ng = grid.n_ghost();
  StepRecord rec;
  rec.step = step_index;
  rec.dt = dt;
  rec.max_lambda = opts_.wave_speeds == WaveSpeeds::plain ? params_.frozen_speed()
                                                          : es.lambda_plus;
  rec.min_e_r = std::numeric_limits<double>::infinity();
  rec.max_e_r = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.n_cell(); ++i) {
    const ConservedState u_n = grid[i];
    const double t4 = t4_[i + ng];
    const ConservedState u_hat = corrector_guess(u_n, div[i], t4, params_, dt);
    const ConservedState u_new = corrector_update(u_n, u_hat, div[i], t4, params_, dt);
    if (!u_new.finite()) {
      throw NumericalError("non-finite state at step " + std::to_string(step_index) +
                               ", cell " + std::to_string(i),
                           step_index, static_cast<long>(i));
    }
    grid[i] = u_new;
    rec.min_e_r = std::min(rec.min_e_r, u_new.e_r);
    rec.max_e_r = std::max(rec.max_e_r, u_new.e_r);
  }
  return rec;
}

RunDiagnostics Stepper::advance(GridField& grid, const StepControl& ctrl, double t_start,
                                long first_step) {
  RunDiagnostics diag;
  diag.time = t_start;
  long index = first_step;
  while (diag.time < ctrl.t_final) {
    const double dt = select_dt(ctrl, grid, params_, diag.time);
    StepRecord rec = step(grid, dt, index++);
    const bool last = dt == ctrl.t_final - diag.time;
    diag.time = last ? ctrl.t_final : diag.time + dt;
    rec.time = diag.time;
    if (rec.min_e_r < 0.0) diag.negative_energy = true;
    diag.records.push_back(rec);
    ++diag.steps;
  }
  fill_boundary(grid, opts_.bc);
  return diag;
}

RunDiagnostics advance(GridField& grid, const StepControl& ctrl, const PhysParams& p,
                       const SolverOptions& opts) {
  Stepper stepper(p, opts);
  return stepper.advance(grid, ctrl);
}

}  // namespace godrad
