#ifndef GODRAD_PROBLEMS_HPP_
#define GODRAD_PROBLEMS_HPP_
//========================================================================================
//! \file problems.hpp
//! \brief Built-in test problems: initial data, material temperature, run defaults and
//! reference solutions.
//!
//!  exp_relax_growth / exp_relax_decay
//!      uniform E_r relaxing to T^4 at rate C sigma_a; exact exponential reference
//!  free_stream_gauss / free_stream_square
//!      optically thin advection at sqrt(f) C; reference is the translated profile
//!  weak_diffusion
//!      sigma = 40, f = 1/3 Gaussian; Green's-function diffusion profile is available
//!      as an approximate reference, convergence is measured self-similarly
//!  strong_diffusion
//!      sigma = 1e6 Gaussian, frozen; reference is the initial condition
//!  gaussian_temperature
//!      zero radiation grows into a Gaussian T(x)^4 (qualitative check)
//========================================================================================

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "godrad/boundary.hpp"
#include "godrad/core.hpp"
#include "godrad/timestepper.hpp"

namespace godrad {

enum class ProblemKind {
  exp_relax_growth,
  exp_relax_decay,
  free_stream_gauss,
  free_stream_square,
  weak_diffusion,
  strong_diffusion,
  gaussian_temperature,
};

enum class Comparison { analytic, self_similar };

//! Every built-in problem name accepted by problem_from_name().
std::vector<std::string_view> problem_names();

struct ProblemSpec {
  ProblemKind kind = ProblemKind::exp_relax_growth;
  std::string name;

  // physics
  double cc = 1e5;
  double sigma_a = 0.0;
  double sigma_t = 0.0;
  double f = 1.0;
  TemperatureKind temp_kind = TemperatureKind::uniform;
  double temperature = 1.0;  // uniform T, or peak T of a Gaussian T(x)

  // domain and initial data
  double x_min = 0.0;
  double x_max = 1.0;
  double nu = 20.0;         // Gaussian inverse width
  double mu = 0.3;          // Gaussian centre
  double pulse_lo = 0.2;    // square pulse support
  double pulse_hi = 0.4;
  double e0 = 1.0;          // uniform initial E_r

  // run defaults
  BoundaryKind bc = BoundaryKind::outflow;
  StepControl control{};
  std::vector<std::size_t> ladder;
  Comparison comparison = Comparison::analytic;

  PhysParams params(const GridField& grid) const;
};

//! Defaults for a problem. Throws ConfigError for an unknown name.
ProblemSpec problem_from_name(std::string_view name);
ProblemSpec default_spec(ProblemKind kind);

struct ProblemSetup {
  GridField grid;
  PhysParams params;
};

//! Pointwise samples of the initial condition at cell centres (ghosts filled).
ProblemSetup init(const ProblemSpec& spec, std::size_t n_cell);

//! Initial condition at a point.
ConservedState initial_state(const ProblemSpec& spec, double x);

//! Reference solution at (x, t); nullopt when the problem has none.
std::optional<ConservedState> reference(const ProblemSpec& spec, double x, double t);

//! Reference sampled at every interior cell centre of grid; nullopt when unavailable.
std::optional<std::vector<ConservedState>> reference_on(const ProblemSpec& spec,
                                                        const GridField& grid, double t);

}  // namespace godrad

#endif  // GODRAD_PROBLEMS_HPP_
