#pragma once

#include "mpga/entity.hpp"

namespace mpga {

enum class DecompRegime {
  simple,
  two_finite_axes,
  finite_plus_infinity,
  null_nonunique,
  irreducible,
};

/// Split of a bivector (or trivector) into commuting simple parts with
/// part1 + part2 = input. part2 is zero for simple input; for the
/// irreducible regime the parts are the input and zero and the split
/// predicates do not apply.
struct BivectorDecomposition {
  Multivector part1;
  Multivector part2;
  DecompRegime regime;
};

/// M3: finite axis + axis at infinity via a = (L v L) / (2 L . L);
/// null non-simple bivectors are irreducible.
BivectorDecomposition decompose_bivector_m3(const Multivector& bivector,
                                            const Tolerance& tol = {});

/// M4 regimes: (pi^pi)^2 != 0 gives two finite axes (one proper, one
/// improper) from the quadratic for pi_i^2; (pi^pi)^2 = 0 with
/// pi . pi != 0 gives a finite axis plus a plane at infinity; the doubly
/// null case splits into null/infinity planes when possible (the pair is
/// not unique; a deterministic least-squares pick is returned) and is
/// irreducible when pi^3 != 0.
BivectorDecomposition decompose_bivector_m4(const Multivector& bivector,
                                            const Tolerance& tol = {});

/// M4 trivectors: finite line + line at infinity when Phi . Phi != 0;
/// pure infinity trivectors e0 ^ pi split along the spatial axes of pi;
/// otherwise irreducible.
BivectorDecomposition decompose_trivector_m4(const Multivector& trivector,
                                             const Tolerance& tol = {});

/// Closed-form action of exp(-theta/2 eta) for an irreducible null
/// generator (eta.eta = 0, eta^eta != 0, eta^3 != 0):
/// P + theta PxL - theta^2/4 L P L - theta^3/12 Px(L^3).
Entity irreducible_null_action(const Multivector& eta, double theta,
                               const Entity& p, const Tolerance& tol = {});

}  // namespace mpga
