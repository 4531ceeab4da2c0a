#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpga/multivector.hpp"

namespace mpga {

enum class Role { point, line, plane, hyperplane };

/// Grade of the blade representing a role in a space; throws for roles a
/// space does not have (e.g. hyperplanes in M2).
int role_grade(Space space, Role role);
/// Inverse lookup: in a fixed space the homogeneous grade determines the
/// role (grade 0 and the pseudoscalar grade have none).
std::optional<Role> grade_role(Space space, int grade);
std::string role_name(Role role);

enum class MetricKind { proper, improper, null_kind };
enum class Locus { finite, at_infinity };
enum class OrientationTag { future, past, not_applicable };

/// Sign classification of an entity. metric_kind carries the finite
/// taxonomy (proper / improper / null); for entities at infinity it is
/// still the sign of the metric square but is reported alongside the
/// locus rather than as part of the finite taxonomy.
struct Classification {
  MetricKind metric_kind;
  Locus locus;
  OrientationTag orientation;
};

std::string to_string(const Classification& c);

/// A homogeneous multivector tagged with its geometric role. Lines in M3
/// and planes/lines in M4 must be simple; non-simple bivectors and
/// trivectors (e.g. commutators of lines) stay raw Multivectors.
class Entity {
 public:
  Entity(Multivector mv, Role role, const Tolerance& tol = {});

  /// Infers the role from the homogeneous grade.
  static Entity from(Multivector mv, const Tolerance& tol = {});

  const Multivector& mv() const { return mv_; }
  Role role() const { return role_; }
  Space space() const { return mv_.signature().tag(); }
  const Classification& classification() const { return class_; }

  Entity normalized(const Tolerance& tol = {}) const;

 private:
  Multivector mv_;
  Role role_;
  Classification class_;
};

/// Standard-basis constructors. M2 points are (w, x, t), M3 points
/// (w, x, y, t), M4 points (w, x, y, z, t); vectors are (d, a, h),
/// (d, a, b, h), (d, a, b, c, h).
Entity make_point(Space space, const std::vector<double>& coords);
/// M2: (d, a, h). M3: Pluecker coordinates (p10, p20, p30, p23, p31, p12),
/// rejected if the simplicity condition fails beyond tolerance. M4: the
/// ten trivector coordinates (s210, s310, s410, s320, s420, s430, s234,
/// s314, s124, s321), simplicity checked via the self-join.
Entity make_line(Space space, const std::vector<double>& coords,
                 const Tolerance& tol = {});
/// M3: (d, a, b, h). M4: the ten bivector coordinates (p10, p20, p30, p40,
/// p41, p42, p43, p23, p31, p12) with the simplicity check.
Entity make_plane(Space space, const std::vector<double>& coords,
                  const Tolerance& tol = {});
/// M4 only: (d, a, b, c, h).
Entity make_hyperplane(Space space, const std::vector<double>& coords);

/// e0-free part of a multivector; an entity is finite iff this is nonzero.
Multivector finite_part(const Multivector& a);

Classification classify(const Multivector& mv, Role role,
                        const Tolerance& tol = {});
inline Classification classify(const Entity& e, const Tolerance& tol = {}) {
  return classify(e.mv(), e.role(), tol);
}

/// Future/past orientation of a proper line; anything else is an error.
OrientationTag orientation(const Entity& e, const Tolerance& tol = {});

/// Sign of the metric square that makes a finite entity proper, e.g. +1
/// for M2 lines, -1 for M3 lines (the paper's sign reversal).
int proper_square_sign(Space space, Role role);

}  // namespace mpga
