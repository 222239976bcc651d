#ifndef GODRAD_EIGENSYSTEM_HPP_
#define GODRAD_EIGENSYSTEM_HPP_
//========================================================================================
//! \file eigensystem.hpp
//! \brief Source-modified (effective) Jacobian of the radiation subsystem.
//!
//! Averaging exp(tau * dS/dU) over the predictor half step dt/2 gives the propagation
//! operator diag(alpha, beta) with
//!
//!   alpha = (1 - exp(-C sigma_a dt/2)) / (C sigma_a dt/2)
//!   beta  = (1 - exp(-C sigma_t dt/2)) / (C sigma_t dt/2)
//!
//! and the effective Jacobian A_eff = [[0, alpha C], [beta f C, 0]] whose eigenvalues
//! +-sqrt(alpha beta f) C always lie inside the frozen speeds +-sqrt(f) C.
//!
//! Eigenvector ordering: index 0 is the left-going (minus) family, index 1 the
//! right-going (plus) family. Right eigenvectors are stored as the columns of r_eff,
//! left eigenvectors as the rows of l_eff.
//========================================================================================

#include <array>

#include "godrad/core.hpp"

namespace godrad {

struct EffectiveEigensystem {
  double alpha = 1.0;
  double beta = 1.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  Matrix2 a_eff;
  Matrix2 r_eff;  // columns are right eigenvectors
  Matrix2 l_eff;  // rows are left eigenvectors

  //! Eigenvalue of family k (0 = minus, 1 = plus).
  double lambda(int k) const { return k == 0 ? lambda_minus : lambda_plus; }
  //! Right eigenvector of family k.
  ConservedState right(int k) const { return {r_eff.m[0][k], r_eff.m[1][k]}; }
  //! diag(alpha, beta), the propagation operator evaluated at dt/2.
  Matrix2 propagation() const { return Matrix2::diag(alpha, beta); }
};

//! (1 - exp(-x))/x for x >= 0, with the limit value 1 at x = 0.
double propagation_weight(double x);

//! Effective eigensystem for time step dt (> 0). Throws ConfigError on dt <= 0.
EffectiveEigensystem build_effective(const PhysParams& p, double dt);

//! Unmodified eigensystem of A (alpha = beta = 1).
EffectiveEigensystem build_frozen(const PhysParams& p);

//! Characteristic amplitudes l_eff^k . du for k = 0, 1.
std::array<double, 2> characteristic_decompose(const EffectiveEigensystem& es,
                                               const ConservedState& du);

//! Sum_k amplitude_k r_eff^k.
ConservedState characteristic_compose(const EffectiveEigensystem& es,
                                      const std::array<double, 2>& amplitude);

}  // namespace godrad

#endif  // GODRAD_EIGENSYSTEM_HPP_
