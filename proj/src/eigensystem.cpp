//! \file eigensystem.cpp
//! \brief Propagation weights and the closed-form 2x2 effective eigen-decomposition.

#include "godrad/eigensystem.hpp"

#include <cassert>
#include <cmath>

namespace godrad {

double propagation_weight(double x) {
  assert(x >= 0.0);
  if (x == 0.0) return 1.0;
  // expm1 keeps full relative precision for small x where 1 - exp(-x) cancels
  return -std::expm1(-x) / x;
}

namespace {

EffectiveEigensystem assemble(const PhysParams& p, double alpha, double beta) {
  EffectiveEigensystem es;
  es.alpha = alpha;
  es.beta = beta;
  const double speed = std::sqrt(alpha * beta * p.f) * p.cc;
  es.lambda_minus = -speed;
  es.lambda_plus = speed;
  assert(speed > 0.0);

  es.a_eff = {{{{0.0, alpha * p.cc}, {beta * p.f * p.cc, 0.0}}}};

  const double ratio = std::sqrt(beta * p.f / alpha);
  es.r_eff = {{{{1.0, 1.0}, {-ratio, ratio}}}};
  const double inv = 0.5 / ratio;
  es.l_eff = {{{{0.5, -inv}, {0.5, inv}}}};
  return es;
}

}  // namespace

EffectiveEigensystem build_effective(const PhysParams& p, double dt) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const double half = 0.5 * dt * p.cc;
  return assemble(p, propagation_weight(half * p.sigma_a),
                  propagation_weight(half * p.sigma_t));
}

EffectiveEigensystem build_frozen(const PhysParams& p) { return assemble(p, 1.0, 1.0); }

std::array<double, 2> characteristic_decompose(const EffectiveEigensystem& es,
                                               const ConservedState& du) {
  const ConservedState a = es.l_eff * du;
  return {a.e_r, a.f_r};
}

ConservedState characteristic_compose(const EffectiveEigensystem& es,
                                      const std::array<double, 2>& amplitude) {
  return es.r_eff * ConservedState{amplitude[0], amplitude[1]};
}

}  // namespace godrad
