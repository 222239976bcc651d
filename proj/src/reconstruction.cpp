//! \file reconstruction.cpp
//! \brief Characteristic piecewise-linear reconstruction with stiff-source half step.

#include "godrad/reconstruction.hpp"

#include <cassert>

namespace godrad {

double van_leer(double a, double b) {
  const double ab = a * b;
  if (ab <= 0.0) return 0.0;
  return 2.0 * ab / (a + b);
}

ConservedState limited_slope(const ConservedState& u_minus, const ConservedState& u_center,
                             const ConservedState& u_plus) {
  const ConservedState a = u_center - u_minus;
  const ConservedState b = u_plus - u_center;
  return {van_leer(a.e_r, b.e_r), van_leer(a.f_r, b.f_r)};
}

ConservedState project_toward_face(const EffectiveEigensystem& es, const ConservedState& du,
                                   int sign) {
  const auto amp = characteristic_decompose(es, du);
  ConservedState out;
  for (int k = 0; k < 2; ++k) {
    const double lam = es.lambda(k);
    assert(lam != 0.0);
    if (sign * lam > 0.0) out += amp[k] * es.right(k);
  }
  return out;
}

namespace {

ConservedState characteristic_slope(const EffectiveEigensystem& es,
                                    const ConservedState& u_minus,
                                    const ConservedState& u_center,
                                    const ConservedState& u_plus) {
  const auto a = characteristic_decompose(es, u_center - u_minus);
  const auto b = characteristic_decompose(es, u_plus - u_center);
  return characteristic_compose(es, {van_leer(a[0], b[0]), van_leer(a[1], b[1])});
}

}  // namespace

FaceStates predict_face_states(const GridField& grid, const EffectiveEigensystem& es,
                               const PhysParams& p, std::span<const double> t4, double dt,
                               const ReconstructionOptions& opts) {
  assert(t4.size() == grid.n_total());
  const std::size_t ng = grid.n_ghost();
  const std::size_t n = grid.n_cell();
  const double nu = dt / grid.dx();
  const Matrix2 prop = es.propagation();

  // (+-I - nu A_eff)/2
  Matrix2 plus_op, minus_op;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double id = (r == c) ? 1.0 : 0.0;
      plus_op.m[r][c] = 0.5 * (id - nu * es.a_eff.m[r][c]);
      minus_op.m[r][c] = 0.5 * (-id - nu * es.a_eff.m[r][c]);
    }
  }

  FaceStates faces;
  faces.left.resize(n + 1);
  faces.right.resize(n + 1);

  // cells ng-1 .. ng+n in raw indexing: one ghost on each side feeds the boundary faces
  for (std::size_t k = ng - 1; k <= ng + n; ++k) {
    const ConservedState& u = grid.raw(k);
    const ConservedState base = u + (0.5 * dt) * (prop * source(u, t4[k], p));

    ConservedState slope;
    if (opts.kind == Reconstruction::plm) {
      slope = opts.limiting == SlopeLimiting::conserved
                  ? limited_slope(grid.raw(k - 1), u, grid.raw(k + 1))
                  : characteristic_slope(es, grid.raw(k - 1), u, grid.raw(k + 1));
    }

    const ConservedState u_plus = base + plus_op * project_toward_face(es, slope, +1);
    const ConservedState u_minus = base + minus_op * project_toward_face(es, slope, -1);

    // raw cell k is interior cell k - ng: its right face is interface k - ng + 1
    if (k + 1 - ng <= n) faces.left[k + 1 - ng] = u_plus;
    if (k >= ng) faces.right[k - ng] = u_minus;
  }
  return faces;
}

}  // namespace godrad
