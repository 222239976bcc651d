//! \file problems.cpp
//! \brief Initial data, defaults and reference solutions of the built-in problems.

#include "godrad/problems.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace godrad {

namespace {

constexpr std::array<std::pair<std::string_view, ProblemKind>, 8> kNames{{
    {"exp_relax_growth", ProblemKind::exp_relax_growth},
    {"exp_relax", ProblemKind::exp_relax_growth},
    {"exp_relax_decay", ProblemKind::exp_relax_decay},
    {"free_stream_gauss", ProblemKind::free_stream_gauss},
    {"free_stream_square", ProblemKind::free_stream_square},
    {"weak_diffusion", ProblemKind::weak_diffusion},
    {"strong_diffusion", ProblemKind::strong_diffusion},
    {"gaussian_temperature", ProblemKind::gaussian_temperature},
}};

double gaussian(double nu, double mu, double x) {
  const double a = nu * (x - mu);
  return std::exp(-a * a);
}

}  // namespace

std::vector<std::string_view> problem_names() {
  std::vector<std::string_view> out;
  for (const auto& [name, kind] : kNames) out.push_back(name);
  return out;
}

ProblemSpec problem_from_name(std::string_view name) {
  for (const auto& [n, kind] : kNames) {
    if (n == name) return default_spec(kind);
  }
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

ProblemSpec default_spec(ProblemKind kind) {
  ProblemSpec s;
  s.kind = kind;
  s.control.cfl = 0.5;
  s.control.mode = DtMode::hyperbolic;
  switch (kind) {
    case ProblemKind::exp_relax_growth:
    case ProblemKind::exp_relax_decay:
      s.name = kind == ProblemKind::exp_relax_growth ? "exp_relax_growth" : "exp_relax_decay";
      s.sigma_a = 1.0;
      s.sigma_t = 2.0;
      s.f = 1.0;
      s.e0 = kind == ProblemKind::exp_relax_growth ? 1.0 : 1e4;
      s.temperature = kind == ProblemKind::exp_relax_growth ? 10.0 : 1.0;
      s.ladder = {32, 64, 128, 256};
      s.control.t_final = 1e-5;
      break;
    case ProblemKind::free_stream_gauss:
    case ProblemKind::free_stream_square:
      s.name = kind == ProblemKind::free_stream_gauss ? "free_stream_gauss"
                                                      : "free_stream_square";
      s.sigma_a = 1e-6;
      s.sigma_t = 1e-6;
      s.f = 1.0;
      s.temperature = 1.0;
      s.ladder = {32, 64, 128, 256};
      s.control.t_final = 4e-6;
      break;
    case ProblemKind::weak_diffusion:
    case ProblemKind::strong_diffusion: {
      const bool weak = kind == ProblemKind::weak_diffusion;
      s.name = weak ? "weak_diffusion" : "strong_diffusion";
      s.sigma_a = weak ? 40.0 : 1e6;
      s.sigma_t = s.sigma_a;
      s.f = 1.0 / 3.0;
      s.temp_kind = TemperatureKind::radiation_equilibrium;
      s.x_min = -5.0;
      s.x_max = 5.0;
      s.ladder = {320, 640, 1280, 2560};
      s.control.t_final = 4e-6;
      s.comparison = Comparison::self_similar;
      break;
    }
    case ProblemKind::gaussian_temperature:
      s.name = "gaussian_temperature";
      s.sigma_a = 100.0;
      s.sigma_t = 100.0;
      s.f = 1.0 / 3.0;
      s.temp_kind = TemperatureKind::field;
      s.temperature = 1.0;
      s.mu = 0.5;
      s.e0 = 0.0;
      s.ladder = {64, 128, 256, 512};
      s.control.t_final = 1e-6;
      s.comparison = Comparison::self_similar;
      break;
  }
  return s;
}

PhysParams ProblemSpec::params(const GridField& grid) const {
  MaterialTemperature temp;
  switch (temp_kind) {
    case TemperatureKind::uniform:
      temp = MaterialTemperature::uniform_temperature(temperature);
      break;
    case TemperatureKind::field: {
      std::vector<double> t4(grid.n_cell());
      for (std::size_t i = 0; i < grid.n_cell(); ++i) {
        const double t = temperature * gaussian(nu, mu, grid.cell_center(static_cast<long>(i)));
        t4[i] = (t * t) * (t * t);
      }
      temp = MaterialTemperature::from_t4_field(std::move(t4));
      break;
    }
    case TemperatureKind::radiation_equilibrium:
      temp = MaterialTemperature::radiation_equilibrium();
      break;
  }
  return PhysParams::make(cc, sigma_a, sigma_t, f, std::move(temp));
}

ConservedState initial_state(const ProblemSpec& spec, double x) {
  switch (spec.kind) {
    case ProblemKind::exp_relax_growth:
    case ProblemKind::exp_relax_decay:
    case ProblemKind::gaussian_temperature:
      return {spec.e0, 0.0};
    case ProblemKind::free_stream_gauss: {
      const double g = gaussian(spec.nu, spec.mu, x);
      return {g, g};
    }
    case ProblemKind::free_stream_square: {
      const double v = (x > spec.pulse_lo && x < spec.pulse_hi) ? 1.0 : 0.0;
      return {v, v};
    }
    case ProblemKind::weak_diffusion:
    case ProblemKind::strong_diffusion: {
      // F_r = -(f/sigma_t) dE_r/dx with dE_r/dx = -2 nu^2 (x - mu) E_r
      const double e = gaussian(spec.nu, spec.mu, x);
      return {e, 2.0 * spec.f * spec.nu * spec.nu * (x - spec.mu) / spec.sigma_t * e};
    }
  }
  return {};
}

ProblemSetup init(const ProblemSpec& spec, std::size_t n_cell) {
  if (n_cell == 0) throw ConfigError("n_cell must be positive");
  GridField grid(n_cell, spec.x_min, spec.x_max);
  for (std::size_t i = 0; i < n_cell; ++i)
    grid[i] = initial_state(spec, grid.cell_center(static_cast<long>(i)));
  fill_boundary(grid, spec.bc);
  PhysParams p = spec.params(grid);
  return {std::move(grid), std::move(p)};
}

std::optional<ConservedState> reference(const ProblemSpec& spec, double x, double t) {
  switch (spec.kind) {
    case ProblemKind::exp_relax_growth:
    case ProblemKind::exp_relax_decay: {
      const double t2 = spec.temperature * spec.temperature;
      const double t4 = t2 * t2;
      return ConservedState{t4 + (spec.e0 - t4) * std::exp(-spec.cc * spec.sigma_a * t), 0.0};
    }
    case ProblemKind::free_stream_gauss:
    case ProblemKind::free_stream_square:
      return initial_state(spec, x - std::sqrt(spec.f) * spec.cc * t);
    case ProblemKind::weak_diffusion: {
      const double d = spec.f * spec.cc / spec.sigma_t;
      const double s = 4.0 * d * t * spec.nu * spec.nu + 1.0;
      const double a = spec.nu * (x - spec.mu);
      const double e = std::exp(-a * a / s) / std::sqrt(s);
      return ConservedState{e, 2.0 * spec.f * spec.nu * spec.nu * (x - spec.mu) /
                                   (spec.sigma_t * s) * e};
    }
    case ProblemKind::strong_diffusion:
      return ConservedState{initial_state(spec, x).e_r, 0.0};
    case ProblemKind::gaussian_temperature:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::vector<ConservedState>> reference_on(const ProblemSpec& spec,
                                                        const GridField& grid, double t) {
  std::vector<ConservedState> out(grid.n_cell());
  for (std::size_t i = 0; i < grid.n_cell(); ++i) {
    auto r = reference(spec, grid.cell_center(static_cast<long>(i)), t);
    if (!r) return std::nullopt;
    out[i] = *r;
  }
  return out;
}

}  // namespace godrad
