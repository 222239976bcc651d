//! \file core.cpp
//! \brief Flux, source and parameter validation for the radiation subsystem.

#include "godrad/core.hpp"

#include <algorithm>
#include <cmath>

namespace godrad {

bool ConservedState::finite() const noexcept {
  return std::isfinite(e_r) && std::isfinite(f_r);
}

MaterialTemperature MaterialTemperature::uniform_temperature(double temperature) {
  if (!(temperature >= 0.0)) throw ConfigError("material temperature must be >= 0");
  MaterialTemperature t;
  t.kind = TemperatureKind::uniform;
  const double t2 = temperature * temperature;
  t.t4_uniform = t2 * t2;
  return t;
}

MaterialTemperature MaterialTemperature::from_t4_field(std::vector<double> t4) {
  if (std::any_of(t4.begin(), t4.end(), [](double v) { return !(v >= 0.0); }))
    throw ConfigError("T^4 field must be non-negative and finite");
  MaterialTemperature t;
  t.kind = TemperatureKind::field;
  t.t4_field = std::move(t4);
  return t;
}

MaterialTemperature MaterialTemperature::radiation_equilibrium() {
  MaterialTemperature t;
  t.kind = TemperatureKind::radiation_equilibrium;
  return t;
}

PhysParams PhysParams::make(double cc, double sigma_a, double sigma_t, double f,
                            MaterialTemperature temp) {
  PhysParams p{cc, sigma_a, sigma_t, f, std::move(temp)};
  p.validate();
  return p;
}

void PhysParams::validate() const {
  if (!(cc > 0.0) || !std::isfinite(cc)) throw ConfigError("C must be positive");
  if (!(sigma_a >= 0.0)) throw ConfigError("sigma_a must be >= 0");
  if (!(sigma_t >= sigma_a)) throw ConfigError("sigma_t must be >= sigma_a");
  if (!(f > 0.0 && f <= 1.0)) throw ConfigError("Eddington factor must lie in (0, 1]");
  if (temp.kind == TemperatureKind::uniform && !(temp.t4_uniform >= 0.0))
    throw ConfigError("T^4 must be >= 0");
}

double PhysParams::frozen_speed() const { return std::sqrt(f) * cc; }

double PhysParams::diffusion_coefficient() const { return f * cc / sigma_t; }

GridField::GridField(std::size_t n_cell, double x_min, double x_max, std::size_t n_ghost)
    : n_cell_(n_cell), n_ghost_(n_ghost), x_min_(x_min), x_max_(x_max) {
  if (n_cell == 0) throw ConfigError("grid needs at least one cell");
  if (n_ghost < 2) throw ConfigError("grid needs at least two ghost layers");
  if (!(x_max > x_min)) throw ConfigError("domain must satisfy x_max > x_min");
  dx_ = (x_max - x_min) / static_cast<double>(n_cell);
  data_.resize(n_cell + 2 * n_ghost);
}

ConservedState flux(const ConservedState& u, const PhysParams& p) {
  return {p.cc * u.f_r, p.cc * p.f * u.e_r};
}

ConservedState source(const ConservedState& u, double t4, const PhysParams& p) {
  return {p.cc * p.sigma_a * (t4 - u.e_r), -p.cc * p.sigma_t * u.f_r};
}

Matrix2 source_jacobian(const PhysParams& p) {
  return Matrix2::diag(-p.cc * p.sigma_a, -p.cc * p.sigma_t);
}

Matrix2 flux_jacobian(const PhysParams& p) {
  return {{{{0.0, p.cc}, {p.cc * p.f, 0.0}}}};
}

}  // namespace godrad
