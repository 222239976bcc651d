#ifndef GODRAD_RIEMANN_HPP_
#define GODRAD_RIEMANN_HPP_
//========================================================================================
//! \file riemann.hpp
//! \brief HLLE interface flux for the constant-coefficient 2x2 radiation system.
//!
//! The flux Jacobian is constant, so HLLE needs no primitive transform and no Roe
//! averaging: the two signal speeds come straight from the eigensystem.
//========================================================================================

#include "godrad/core.hpp"
#include "godrad/eigensystem.hpp"

namespace godrad {

//! Which signal speeds bound the HLLE fan.
enum class WaveSpeeds {
  effective,  // +-sqrt(alpha beta f) C from the source-modified Jacobian
  plain,      // +-sqrt(f) C from the unmodified Jacobian
};

//! HLLE flux with explicit signal speeds s_left < s_right.
ConservedState hlle_flux(const ConservedState& u_left, const ConservedState& u_right,
                         double s_left, double s_right, const PhysParams& p);

//! HLLE flux with signal speeds taken from es (or the frozen speeds for plain).
ConservedState hlle_flux(const ConservedState& u_left, const ConservedState& u_right,
                         const EffectiveEigensystem& es, const PhysParams& p,
                         WaveSpeeds speeds = WaveSpeeds::effective);

}  // namespace godrad

#endif  // GODRAD_RIEMANN_HPP_
