#ifndef GODRAD_RECONSTRUCTION_HPP_
#define GODRAD_RECONSTRUCTION_HPP_
//========================================================================================
//! \file reconstruction.hpp
//! \brief Time-centred face states from limited piecewise-linear reconstruction.
//!
//! For interior cell i the two face states are
//!
//!   U_{i,+-} = U_i + (dt/2) diag(alpha, beta) S(U_i)
//!                  + 1/2 (+-I - (dt/dx) A_eff) P_+-(dU_i)
//!
//! where dU_i is the van Leer limited slope and P_+ (P_-) keeps only the characteristic
//! components of dU_i with positive (negative) effective speed. The right face of cell
//! i is fed by its right-going waves, the left face by its left-going waves.
//========================================================================================

#include <span>
#include <vector>

#include "godrad/core.hpp"
#include "godrad/eigensystem.hpp"

namespace godrad {

enum class Reconstruction { plm, pcm };

enum class SlopeLimiting {
  conserved,       // limit E_r and F_r differences, then project
  characteristic,  // project one-sided differences, limit the amplitudes
};

struct ReconstructionOptions {
  Reconstruction kind = Reconstruction::plm;
  SlopeLimiting limiting = SlopeLimiting::conserved;
};

//! Face states at the n_cell + 1 interfaces of the interior. Interface k sits between
//! interior cells k - 1 and k; left[k] comes from cell k - 1, right[k] from cell k.
struct FaceStates {
  std::vector<ConservedState> left;
  std::vector<ConservedState> right;
};

//! Van Leer harmonic-mean slope of one scalar: 2ab/(a+b) if ab > 0, else 0.
double van_leer(double a, double b);

//! Component-wise van Leer slope from three consecutive cell states.
ConservedState limited_slope(const ConservedState& u_minus, const ConservedState& u_center,
                             const ConservedState& u_plus);

//! P_+ (sign > 0) or P_- (sign < 0) projection of a slope onto the families moving
//! toward the corresponding face.
ConservedState project_toward_face(const EffectiveEigensystem& es, const ConservedState& du,
                                   int sign);

//! Face states for every interior interface. t4 spans the ghosted array (one value per
//! grid.raw() entry); ghost cells must already be filled.
FaceStates predict_face_states(const GridField& grid, const EffectiveEigensystem& es,
                               const PhysParams& p, std::span<const double> t4, double dt,
                               const ReconstructionOptions& opts = {});

}  // namespace godrad

#endif  // GODRAD_RECONSTRUCTION_HPP_
