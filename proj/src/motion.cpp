#include "mpga/motion.hpp"

#include <cmath>

namespace mpga {

std::string motion_kind_name(MotionKind kind) {
  switch (kind) {
    case MotionKind::elliptic_rotation:
      return "elliptic_rotation";
    case MotionKind::hyperbolic_rotation:
      return "hyperbolic_rotation";
    case MotionKind::parabolic_rotation:
      return "parabolic_rotation";
    case MotionKind::euclidean_rotation:
      return "euclidean_rotation";
    case MotionKind::translation:
      return "translation";
    case MotionKind::screw:
      return "screw";
    case MotionKind::double_rotation:
      return "double_rotation";
    case MotionKind::loxodromic:
      return "loxodromic";
    case MotionKind::null_degenerate:
      return "null_degenerate";
    case MotionKind::irreducible_null:
      return "irreducible_null";
  }
  return "?";
}

namespace {

/// Direction vector u with e0 ^ u equal to an at-infinity bivector.
Multivector translation_direction(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector u(sig);
  for (int i = 1; i < sig.dim_total(); ++i)
    u = u + Multivector::blade(sig, static_cast<BladeMask>(1u << i),
                               a.coeff(static_cast<BladeMask>(1u | (1u << i))));
  return u;
}

MotionDescriptor make_translation_descriptor(const Multivector& a,
                                             const Tolerance& tol) {
  MotionDescriptor d{};
  d.kind = MotionKind::translation;
  const Multivector u = translation_direction(a);
  const double s = metric_square(u);
  if (std::abs(s) > std::max(tol.abs, tol.rel * u.coeff_norm() * u.coeff_norm())) {
    d.lambda = norm(u);
    d.direction = u / *d.lambda;
  } else {
    // Null direction: the displacement has no defined distance.
    d.direction = u;
  }
  return d;
}

MotionDescriptor classify_simple_finite(const Multivector& a,
                                        const Tolerance& tol) {
  const Signature& sig = a.signature();
  MotionDescriptor d{};
  const double s = metric_square(a);
  const double band =
      std::max(tol.abs, tol.rel * a.coeff_norm() * a.coeff_norm());
  if (std::abs(s) <= band) {
    d.kind = MotionKind::parabolic_rotation;
    d.axis1 = a;
    d.theta1 = 1.0;
    if (sig.dim_total() >= 4) {
      const double c12 = a.coeff(0b0110);
      if (c12 != 0.0) d.theta1_renormalized = c12;
    }
    return d;
  }
  const double theta = norm(a);
  const Multivector axis = a / theta;
  d.axis1 = axis;
  d.theta1 = theta;
  if (sig.dim_total() == 3) {
    // Rotation about a finite M2 point; point orbits are hyperbolas.
    d.kind = MotionKind::hyperbolic_rotation;
    return d;
  }
  if (s > 0) {
    d.kind = MotionKind::hyperbolic_rotation;
    return d;
  }
  const Multivector vertical = Multivector::blade(
      sig, static_cast<BladeMask>(1u << (sig.dim_total() - 1)));
  d.kind = approx_zero(inner(vertical, axis), axis.coeff_norm(), tol)
               ? MotionKind::euclidean_rotation
               : MotionKind::elliptic_rotation;
  return d;
}

MotionDescriptor make_screw_descriptor(const BivectorDecomposition& dec,
                                       const Tolerance& tol) {
  MotionDescriptor d{};
  d.kind = MotionKind::screw;
  const double theta = norm(dec.part1);
  d.theta1 = theta;
  d.axis1 = dec.part1 / theta;
  d.axis2 = dec.part2;
  const Multivector u = translation_direction(dec.part2);
  const double s = metric_square(u);
  if (std::abs(s) >
      std::max(tol.abs, tol.rel * u.coeff_norm() * u.coeff_norm())) {
    d.lambda = norm(u);
    d.direction = u / *d.lambda;
  } else {
    d.direction = u;
  }
  return d;
}

}  // namespace

MotionDescriptor classify_motion(const Multivector& generator,
                                 const Tolerance& tol) {
  auto g = homogeneous_grade(generator, tol);
  if (!g || (*g != 2 && !generator.is_zero()))
    raise(ErrorCode::not_a_bivector,
          "motion classification expects a bivector generator");
  const Signature& sig = generator.signature();

  if (generator.coeff_norm() <= tol.abs) {
    MotionDescriptor d{};
    d.kind = MotionKind::translation;
    d.lambda = 0.0;
    return d;
  }

  if (sig.dim_total() == 3) {
    if (approx_zero(finite_part(generator), generator.coeff_norm(), tol))
      return make_translation_descriptor(generator, tol);
    return classify_simple_finite(generator, tol);
  }

  BivectorDecomposition dec = sig.dim_total() == 4
                                  ? decompose_bivector_m3(generator, tol)
                                  : decompose_bivector_m4(generator, tol);
  switch (dec.regime) {
    case DecompRegime::simple:
      if (approx_zero(finite_part(generator), generator.coeff_norm(), tol))
        return make_translation_descriptor(generator, tol);
      return classify_simple_finite(generator, tol);
    case DecompRegime::finite_plus_infinity:
      return make_screw_descriptor(dec, tol);
    case DecompRegime::two_finite_axes: {
      MotionDescriptor d{};
      const double t1 = norm(dec.part1);
      const double t2 = norm(dec.part2);
      d.theta1 = t1;
      d.theta2 = t2;
      d.axis1 = dec.part1 / t1;
      d.axis2 = dec.part2 / t2;
      // part1 carries the positive square: the improper (boost-like) axis.
      const Multivector e4 = Multivector::blade(sig, 1u << 4);
      const bool boost_like =
          approx_zero(wedge(*d.axis1, e4), d.axis1->coeff_norm(), tol);
      const bool euclidean_like =
          approx_zero(inner(e4, *d.axis2), d.axis2->coeff_norm(), tol);
      d.kind = boost_like && euclidean_like ? MotionKind::loxodromic
                                            : MotionKind::double_rotation;
      return d;
    }
    case DecompRegime::null_nonunique: {
      MotionDescriptor d{};
      d.kind = MotionKind::null_degenerate;
      d.axis1 = dec.part1;
      d.axis2 = dec.part2;
      d.theta1 = 1.0;
      d.theta2 = 1.0;
      return d;
    }
    case DecompRegime::irreducible: {
      MotionDescriptor d{};
      d.kind = MotionKind::irreducible_null;
      d.axis1 = generator;
      d.theta1 = 1.0;
      return d;
    }
  }
  raise(ErrorCode::usage, "unreachable motion regime");
}

std::vector<OrbitSample> orbit(const Multivector& generator, const Entity& x,
                               double theta_from, double theta_to, int steps,
                               const Tolerance& tol) {
  if (steps < 2) raise(ErrorCode::usage, "orbit needs at least 2 steps");
  auto g = homogeneous_grade(generator, tol);
  if (!g || (*g != 2 && !generator.is_zero()))
    raise(ErrorCode::not_a_bivector, "orbit expects a bivector generator");
  require_same_signature(generator, x.mv());

  Multivector axis = generator;
  const double s = metric_square(generator);
  const double band = std::max(
      tol.abs, tol.rel * generator.coeff_norm() * generator.coeff_norm());
  if (std::abs(s) > band) axis = generator / norm(generator);

  std::vector<OrbitSample> samples;
  samples.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double theta =
        theta_from + (theta_to - theta_from) * i / (steps - 1);
    const Spinor s_theta = exp_bivector(axis * (-0.5 * theta), tol);
    samples.push_back({theta, apply(s_theta, x)});
  }
  return samples;
}

}  // namespace mpga
