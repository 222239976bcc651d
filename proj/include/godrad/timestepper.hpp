#ifndef GODRAD_TIMESTEPPER_HPP_
#define GODRAD_TIMESTEPPER_HPP_
//========================================================================================
//! \file timestepper.hpp
//! \brief Predictor-corrector update of the radiation subsystem.
//!
//! One step:
//!  1. fill ghosts, refresh T^4
//!  2. build the effective eigensystem for dt
//!  3. reconstruct time-centred face states and take HLLE fluxes
//!  4. form the frozen flux divergence (div F)^{n+1/2}
//!  5. integrate dU/dt = S(U) - div F per cell with a linearised implicit guess
//!     followed by one Picard (trapezoidal) correction
//========================================================================================

#include <span>
#include <string_view>
#include <vector>

#include "godrad/boundary.hpp"
#include "godrad/core.hpp"
#include "godrad/eigensystem.hpp"
#include "godrad/reconstruction.hpp"
#include "godrad/riemann.hpp"

namespace godrad {

enum class DtMode {
  hyperbolic,  // dt = cfl dx / (sqrt(f) C)
  parabolic,   // dt = cfl dx^2 / (2 D), D = f C / sigma_t
};

DtMode parse_dt_mode(std::string_view name);
std::string_view to_string(DtMode mode);

struct StepControl {
  double cfl = 0.5;
  DtMode mode = DtMode::hyperbolic;
  double t_final = 0.0;
};

struct SolverOptions {
  WaveSpeeds wave_speeds = WaveSpeeds::effective;
  ReconstructionOptions reconstruction{};
  BoundaryKind bc = BoundaryKind::outflow;
};

//! Unclipped step size for the configured mode. Throws ConfigError if it is not positive.
double nominal_dt(const StepControl& ctrl, double dx, const PhysParams& p);

//! Step size from t_now, clipped so the last step lands exactly on t_final.
double select_dt(const StepControl& ctrl, const GridField& grid, const PhysParams& p,
                 double t_now);

//! (F_{i+1/2} - F_{i-1/2})/dx for every interior cell. Ghosts and t4 (ghosted) must be
//! current.
std::vector<ConservedState> flux_divergence(const GridField& grid,
                                            const EffectiveEigensystem& es,
                                            const PhysParams& p, std::span<const double> t4,
                                            double dt, const SolverOptions& opts = {});

//! Linearly implicit initial guess
//!   U^ = U^n + dt (I - dt dS/dU)^{-1} (S(U^n) - div).
ConservedState corrector_guess(const ConservedState& u_n, const ConservedState& div,
                               double t4, const PhysParams& p, double dt);

//! U^{n+1} = U^ + (I - dt dS/dU)^{-1} eps with the Picard residual
//!   eps = U^n + dt/2 (S(U^) + S(U^n)) - dt div - U^.
ConservedState corrector_update(const ConservedState& u_n, const ConservedState& u_hat,
                                const ConservedState& div, double t4, const PhysParams& p,
                                double dt);

struct StepRecord {
  long step = 0;
  double time = 0.0;  // time at the end of the step
  double dt = 0.0;
  double max_lambda = 0.0;
  double min_e_r = 0.0;
  double max_e_r = 0.0;
};

struct RunDiagnostics {
  long steps = 0;
  double time = 0.0;
  bool negative_energy = false;  // any E_r < 0 seen after a step
  std::vector<StepRecord> records;
};

//! Owns the ghosted T^4 workspace and advances a grid it is handed.
class Stepper {
 public:
  Stepper(PhysParams params, SolverOptions opts);

  const PhysParams& params() const noexcept { return params_; }
  const SolverOptions& options() const noexcept { return opts_; }

  //! Fill ghosts of grid and the ghosted T^4 array for the current state.
  void prepare(GridField& grid);

  //! Single step of size dt from the grid's current state.
  StepRecord step(GridField& grid, double dt, long step_index);

  //! Advance from t_start to ctrl.t_final. Throws NumericalError on NaN/Inf.
  RunDiagnostics advance(GridField& grid, const StepControl& ctrl, double t_start = 0.0,
                         long first_step = 0);

  //! Ghosted T^4 values as of the last prepare().
  std::span<const double> t4() const noexcept { return t4_; }

 private:
  PhysParams params_;
  SolverOptions opts_;
  std::vector<double> t4_;
};

//! Convenience wrapper: advance grid from t = 0 to ctrl.t_final.
RunDiagnostics advance(GridField& grid, const StepControl& ctrl, const PhysParams& p,
                       const SolverOptions& opts = {});

}  // namespace godrad

#endif  // GODRAD_TIMESTEPPER_HPP_
