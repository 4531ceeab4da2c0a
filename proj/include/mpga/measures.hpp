#pragma once

#include <optional>
#include <string>

#include "mpga/entity.hpp"

namespace mpga {

/// Outcome of a metric measure. Undefined outcomes are ordinary values
/// (the CLI renders them as undefined(<reason>)), not errors; only
/// precondition violations raise.
struct Measure {
  enum class Status {
    defined,
    undefined_null,
    undefined_improper,
    undefined_proper,
    undefined_mixed_orientation,
  };

  Status status = Status::defined;
  double value = 0.0;
  /// Set when a null join formally gives r = 0; the value is not promoted
  /// to a defined distance.
  bool formal_zero = false;

  bool defined() const { return status == Status::defined; }
  std::string reason() const;

  static Measure of(double v) { return Measure{Status::defined, v, false}; }
  static Measure undefined(Status s, bool formal = false) {
    return Measure{s, 0.0, formal};
  }
};

/// ||P v Q|| for normalized finite points joined by a proper line;
/// undefined(null) / undefined(improper) otherwise.
Measure distance_points(const Entity& p, const Entity& q,
                        const Tolerance& tol = {});

/// |a v P| for a normalized improper vector (M2 line, M3 plane, M4
/// hyperplane) and a normalized point.
Measure distance_line_point(const Entity& a, const Entity& p,
                            const Tolerance& tol = {});

/// ||e12 v (a ^ b)|| for normalized improper parallel M2 lines.
Measure distance_parallel_lines(const Entity& a, const Entity& b,
                                const Tolerance& tol = {});

struct AngleResult {
  Measure measure;
  /// Set for parallel lines: the common point at infinity.
  std::optional<Multivector> meet_at_infinity;
};

/// Hyperbolic angle between normalized proper lines of equal orientation
/// meeting at a finite point; parallel lines give angle 0 with the
/// at-infinity intersection reported.
AngleResult angle_lines(const Entity& a, const Entity& b,
                        const Tolerance& tol = {});

/// (1/2!)|P v Q v R| in M2; points must be connected by proper lines.
Measure triangle_area(const Entity& p, const Entity& q, const Entity& r,
                      const Tolerance& tol = {});
/// (1/3!)|P v Q v R v S| in M3.
Measure simplex_volume(const Entity& p, const Entity& q, const Entity& r,
                       const Entity& s, const Tolerance& tol = {});

/// a = +-(d e0 + e1 cosh(phi) - e2 sinh(phi)).
Entity parametrize_line_m2(double d, double phi, OrientationTag orient);
struct LineParamsM2 {
  double d;
  double phi;
  OrientationTag orient;
};
LineParamsM2 line_params_m2(const Entity& a, const Tolerance& tol = {});

/// Worldline through the origin; past-oriented as displayed in the paper.
Entity worldline_m3(double alpha, double phi);
Entity worldline_m4(double alpha, double beta, double phi);
struct WorldlineParams {
  double alpha = 0.0;
  double beta = 0.0;  // M4 only
  double phi = 0.0;
};
WorldlineParams worldline_params_m3(const Entity& line,
                                    const Tolerance& tol = {});
WorldlineParams worldline_params_m4(const Entity& line,
                                    const Tolerance& tol = {});

/// (A . B) B^-1, (A ^ B) B^-1, and the sandwich reflection; B must be
/// invertible. reflect(b, a) reflects a in the mirror b; bivector objects
/// in M3/M4 reflect as -b A b^-1 so the transported orientation matches
/// the mirror image.
Multivector project(const Multivector& a, const Multivector& b,
                    const Tolerance& tol = {});
Multivector reject(const Multivector& a, const Multivector& b,
                   const Tolerance& tol = {});
Multivector reflect(const Multivector& mirror, const Multivector& a,
                    const Tolerance& tol = {});
/// Directional scaling: project(a, b) + k * reject(a, b); k = -1 is the
/// sandwich reflection for vectors, k = 1 the identity.
Multivector scale(const Multivector& a, const Multivector& b, double k,
                  const Tolerance& tol = {});

/// Inverse of an invertible blade: reverse(B) / <B reverse(B)>_0.
Multivector blade_inverse(const Multivector& b, const Tolerance& tol = {});

}  // namespace mpga
