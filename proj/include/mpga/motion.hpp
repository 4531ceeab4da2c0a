#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpga/decompose.hpp"
#include "mpga/spinor.hpp"

namespace mpga {

enum class MotionKind {
  elliptic_rotation,
  hyperbolic_rotation,  // includes boosts
  parabolic_rotation,
  euclidean_rotation,
  translation,
  screw,
  double_rotation,
  loxodromic,
  null_degenerate,
  irreducible_null,
};

std::string motion_kind_name(MotionKind kind);

/// Classified proper motion of a bivector generator A, read as
/// theta * axis for each commuting simple axis. Null axes cannot be
/// normalized, so parabolic rotations report theta against the caller's
/// weight plus an optional renormalization that sets the e12-style
/// component to one.
struct MotionDescriptor {
  MotionKind kind;
  std::optional<Multivector> axis1;
  std::optional<Multivector> axis2;
  std::optional<double> theta1;
  std::optional<double> theta2;
  std::optional<double> theta1_renormalized;
  std::optional<double> lambda;
  /// For translations and screws: the vector a of the generator e0 ^ a
  /// (normalized when possible); the displacement runs along its polar.
  std::optional<Multivector> direction;
};

MotionDescriptor classify_motion(const Multivector& generator,
                                 const Tolerance& tol = {});

struct OrbitSample {
  double theta;
  Entity entity;
};

/// Samples apply(exp(-theta/2 * A_hat), X) on a uniform theta grid, where
/// A_hat is A normalized when A has nonzero metric norm and A itself
/// otherwise (null generators keep their weight).
std::vector<OrbitSample> orbit(const Multivector& generator, const Entity& x,
                               double theta_from, double theta_to, int steps,
                               const Tolerance& tol = {});

}  // namespace mpga
