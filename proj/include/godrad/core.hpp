#ifndef GODRAD_CORE_HPP_
#define GODRAD_CORE_HPP_
//========================================================================================
//! \file core.hpp
//! \brief Domain types for the radiation subsystem: conserved state, physical
//! parameters, the ghosted cell grid, and the flux/source functions.
//!
//! The subsystem evolves U = (E_r, F_r) with flux F(U) = (C F_r, C f E_r) and source
//! S(U) = (C sigma_a (T^4 - E_r), -C sigma_t F_r). The material temperature never
//! evolves; it enters only through T^4.
//========================================================================================

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace godrad {

//! Raised for invalid user-facing configuration (bad parameters, unknown names).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//! Raised when the solver produces a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, long step, long cell)
      : std::runtime_error(what), step_(step), cell_(cell) {}
  long step() const noexcept { return step_; }
  long cell() const noexcept { return cell_; }

 private:
  long step_;
  long cell_;
};

//! Radiation energy density and flux at one cell (or any 2-vector of the same shape:
//! fluxes, sources, slopes, differences).
struct ConservedState {
  double e_r = 0.0;
  double f_r = 0.0;

  constexpr ConservedState& operator+=(const ConservedState& o) {
    e_r += o.e_r;
    f_r += o.f_r;
    return *this;
  }
  constexpr ConservedState& operator-=(const ConservedState& o) {
    e_r -= o.e_r;
    f_r -= o.f_r;
    return *this;
  }
  constexpr ConservedState& operator*=(double s) {
    e_r *= s;
    f_r *= s;
    return *this;
  }
  friend constexpr ConservedState operator+(ConservedState a, const ConservedState& b) {
    return a += b;
  }
  friend constexpr ConservedState operator-(ConservedState a, const ConservedState& b) {
    return a -= b;
  }
  friend constexpr ConservedState operator*(double s, ConservedState a) { return a *= s; }
  friend constexpr ConservedState operator*(ConservedState a, double s) { return a *= s; }
  friend constexpr bool operator==(const ConservedState&, const ConservedState&) = default;

  bool finite() const noexcept;
};

//! Dense 2x2 matrix, row-major.
struct Matrix2 {
  std::array<std::array<double, 2>, 2> m{};

  constexpr ConservedState operator*(const ConservedState& u) const {
    return {m[0][0] * u.e_r + m[0][1] * u.f_r, m[1][0] * u.e_r + m[1][1] * u.f_r};
  }
  constexpr Matrix2 operator*(const Matrix2& b) const {
    Matrix2 c;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c.m[i][j] = m[i][0] * b.m[0][j] + m[i][1] * b.m[1][j];
    return c;
  }
  static constexpr Matrix2 diag(double a, double b) { return {{{{a, 0.0}, {0.0, b}}}}; }
  static constexpr Matrix2 identity() { return diag(1.0, 1.0); }
};

//! How the material temperature enters the source term.
//!  - uniform: one constant T^4 everywhere
//!  - field: fixed per-cell T(x)^4 sampled at initialization
//!  - radiation_equilibrium: T^4 is set to the cell's E_r at the start of every step,
//!    i.e. the material sits in equilibrium with the radiation it sees
enum class TemperatureKind { uniform, field, radiation_equilibrium };

struct MaterialTemperature {
  TemperatureKind kind = TemperatureKind::uniform;
  double t4_uniform = 0.0;
  std::vector<double> t4_field;  // interior cells only, used when kind == field

  static MaterialTemperature uniform_temperature(double temperature);
  static MaterialTemperature from_t4_field(std::vector<double> t4);
  static MaterialTemperature radiation_equilibrium();
};

//! Source and closure constants. Construct through make() to get the invariants checked.
struct PhysParams {
  double cc = 1.0;       // light-to-sound speed ratio
  double sigma_a = 0.0;  // absorption cross section
  double sigma_t = 0.0;  // total cross section
  double f = 1.0;        // scalar Eddington factor
  MaterialTemperature temp;

  //! Throws ConfigError unless cc > 0, sigma_t >= sigma_a >= 0, 0 < f <= 1 and T^4 >= 0.
  static PhysParams make(double cc, double sigma_a, double sigma_t, double f,
                         MaterialTemperature temp);
  void validate() const;

  //! Frozen characteristic speed sqrt(f)*C.
  double frozen_speed() const;
  //! Diffusion coefficient f*C/sigma_t of the weak equilibrium diffusion limit.
  double diffusion_coefficient() const;
};

//! Cell-centred field of conserved states with n_ghost layers on each side.
class GridField {
 public:
  GridField(std::size_t n_cell, double x_min, double x_max, std::size_t n_ghost = 2);

  std::size_t n_cell() const noexcept { return n_cell_; }
  std::size_t n_ghost() const noexcept { return n_ghost_; }
  std::size_t n_total() const noexcept { return data_.size(); }
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double dx() const noexcept { return dx_; }

  //! Centre of interior cell i (ghosts may use negative or >= n_cell indices).
  double cell_center(long i) const noexcept {
    return x_min_ + (static_cast<double>(i) + 0.5) * dx_;
  }

  //! Interior access, i in [0, n_cell).
  ConservedState& operator[](std::size_t i) { return data_[i + n_ghost_]; }
  const ConservedState& operator[](std::size_t i) const { return data_[i + n_ghost_]; }

  //! Raw access over the ghosted array, k in [0, n_total).
  ConservedState& raw(std::size_t k) { return data_[k]; }
  const ConservedState& raw(std::size_t k) const { return data_[k]; }

  std::span<ConservedState> interior() { return {data_.data() + n_ghost_, n_cell_}; }
  std::span<const ConservedState> interior() const {
    return {data_.data() + n_ghost_, n_cell_};
  }
  std::span<ConservedState> all() { return data_; }
  std::span<const ConservedState> all() const { return data_; }

 private:
  std::size_t n_cell_;
  std::size_t n_ghost_;
  double x_min_;
  double x_max_;
  double dx_;
  std::vector<ConservedState> data_;
};

//! F(U) = (C F_r, C f E_r).
ConservedState flux(const ConservedState& u, const PhysParams& p);

//! S(U) = (C sigma_a (t4 - E_r), -C sigma_t F_r).
ConservedState source(const ConservedState& u, double t4, const PhysParams& p);

//! dS/dU = diag(-C sigma_a, -C sigma_t); T^4 is held fixed.
Matrix2 source_jacobian(const PhysParams& p);

//! dF/dU, the constant Jacobian [[0, C], [C f, 0]].
Matrix2 flux_jacobian(const PhysParams& p);

}  // namespace godrad

#endif  // GODRAD_CORE_HPP_
