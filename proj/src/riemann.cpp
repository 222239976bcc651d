//! \file riemann.cpp
//! \brief HLLE flux.

#include "godrad/riemann.hpp"

#include <cassert>

namespace godrad {

ConservedState hlle_flux(const ConservedState& u_left, const ConservedState& u_right,
                         double s_left, double s_right, const PhysParams& p) {
  assert(s_left < s_right);
  const ConservedState fl = flux(u_left, p);
  if (s_left >= 0.0) return fl;
  const ConservedState fr = flux(u_right, p);
  if (s_right <= 0.0) return fr;
  // (s_R F_L - s_L F_R + s_L s_R (U_R - U_L))/(s_R - s_L), arranged so that equal
  // states return F_L bit for bit
  const double w = s_left / (s_right - s_left);
  return fl + w * ((fl - fr) + s_right * (u_right - u_left));
}

ConservedState hlle_flux(const ConservedState& u_left, const ConservedState& u_right,
                         const EffectiveEigensystem& es, const PhysParams& p,
                         WaveSpeeds speeds) {
  if (speeds == WaveSpeeds::plain) {
    const double c = p.frozen_speed();
    return hlle_flux(u_left, u_right, -c, c, p);
  }
  return hlle_flux(u_left, u_right, es.lambda_minus, es.lambda_plus, p);
}

}  // namespace godrad
