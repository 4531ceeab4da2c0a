#include "mpga/measures.hpp"

#include <cmath>

namespace mpga {

std::string Measure::reason() const {
  switch (status) {
    case Status::defined:
      return "";
    case Status::undefined_null:
      return "null";
    case Status::undefined_improper:
      return "improper";
    case Status::undefined_proper:
      return "proper";
    case Status::undefined_mixed_orientation:
      return "mixed_orientation";
  }
  return "";
}

namespace {

void require_role(const Entity& e, Role role, const char* op) {
  if (e.role() != role)
    raise(ErrorCode::usage,
          std::string(op) + " expects a " + role_name(role) + " here");
}

void require_space(const Entity& e, Space space, const char* op) {
  if (e.space() != space)
    raise(ErrorCode::usage, std::string(op) + " is not defined in " +
                                e.mv().signature().name());
}

/// Classification of a join result treated as the connecting flat.
MetricKind join_kind(const Multivector& join, Role role,
                     const Tolerance& tol) {
  const double square = metric_square(join);
  const double scale2 = join.coeff_norm() * join.coeff_norm();
  if (std::abs(square) <= tol.rel * scale2) return MetricKind::null_kind;
  return square * proper_square_sign(join.signature().tag(), role) > 0
             ? MetricKind::proper
             : MetricKind::improper;
}

/// Coefficient-space proportionality test for the finite parts of two
/// lines (parallelism).
bool proportional_finite_parts(const Multivector& a, const Multivector& b,
                               const Tolerance& tol) {
  const Multivector fa = finite_part(a);
  const Multivector fb = finite_part(b);
  const double na = fa.coeff_norm(), nb = fb.coeff_norm();
  const double dot = fa.coeffs().dot(fb.coeffs());
  const double gram = na * na * nb * nb - dot * dot;
  return gram <= std::max(tol.abs, tol.rel * na * na * nb * nb);
}

}  // namespace

Measure distance_points(const Entity& p, const Entity& q,
                        const Tolerance& tol) {
  require_role(p, Role::point, "distance");
  require_role(q, Role::point, "distance");
  const Multivector pn = normalized(p.mv(), tol);
  const Multivector qn = normalized(q.mv(), tol);
  const Multivector line = regressive_join(pn, qn);
  if (approx_zero(line, pn.coeff_norm() * qn.coeff_norm(), tol))
    return Measure::of(0.0);
  switch (join_kind(line, Role::line, tol)) {
    case MetricKind::proper:
      return Measure::of(norm(line));
    case MetricKind::null_kind:
      return Measure::undefined(Measure::Status::undefined_null, true);
    case MetricKind::improper:
      return Measure::undefined(Measure::Status::undefined_improper);
  }
  return Measure::undefined(Measure::Status::undefined_null);
}

Measure distance_line_point(const Entity& a, const Entity& p,
                            const Tolerance& tol) {
  const Space space = a.space();
  const Role vector_role = space == Space::M2   ? Role::line
                           : space == Space::M3 ? Role::plane
                                                : Role::hyperplane;
  require_role(a, vector_role, "distance");
  require_role(p, Role::point, "distance");
  const Multivector an = normalized(a.mv(), tol);
  switch (classify(an, vector_role, tol).metric_kind) {
    case MetricKind::proper:
      return Measure::undefined(Measure::Status::undefined_proper);
    case MetricKind::null_kind:
      return Measure::undefined(Measure::Status::undefined_null);
    case MetricKind::improper:
      break;
  }
  const Multivector pn = normalized(p.mv(), tol);
  return Measure::of(std::abs(scalar_part(regressive_join(an, pn))));
}

Measure distance_parallel_lines(const Entity& a, const Entity& b,
                                const Tolerance& tol) {
  require_space(a, Space::M2, "parallel-line distance");
  require_role(a, Role::line, "distance");
  require_role(b, Role::line, "distance");
  const Multivector an = normalized(a.mv(), tol);
  const Multivector bn = normalized(b.mv(), tol);
  for (const Multivector* m : {&an, &bn}) {
    switch (classify(*m, Role::line, tol).metric_kind) {
      case MetricKind::proper:
        return Measure::undefined(Measure::Status::undefined_proper);
      case MetricKind::null_kind:
        return Measure::undefined(Measure::Status::undefined_null);
      case MetricKind::improper:
        break;
    }
  }
  const Multivector meet = wedge(an, bn);
  if (!approx_zero(finite_part(meet), meet.coeff_norm() + 1.0, tol))
    raise(ErrorCode::usage, "lines are not parallel");
  const Multivector origin =
      Multivector::blade(a.mv().signature(), {1, 2});
  return Measure::of(norm(regressive_join(origin, meet)));
}

AngleResult angle_lines(const Entity& a, const Entity& b,
                        const Tolerance& tol) {
  require_role(a, Role::line, "angle");
  require_role(b, Role::line, "angle");
  require_same_signature(a.mv(), b.mv());
  const Multivector an = normalized(a.mv(), tol);
  const Multivector bn = normalized(b.mv(), tol);
  const Space space = a.space();

  Classification ca = classify(an, Role::line, tol);
  Classification cb = classify(bn, Role::line, tol);
  for (const Classification* c : {&ca, &cb}) {
    if (c->metric_kind == MetricKind::null_kind)
      return {Measure::undefined(Measure::Status::undefined_null), {}};
    if (c->metric_kind == MetricKind::improper)
      return {Measure::undefined(Measure::Status::undefined_improper), {}};
  }
  if (ca.orientation != cb.orientation)
    return {Measure::undefined(Measure::Status::undefined_mixed_orientation),
            {}};

  if (proportional_finite_parts(an, bn, tol)) {
    const Multivector e0 = Multivector::blade(an.signature(), {0});
    return {Measure::of(0.0), wedge(e0, an)};
  }

  // Distinct directions: the lines must meet at a finite point.
  if (space == Space::M3 &&
      !approx_zero(wedge(an, bn), an.coeff_norm() * bn.coeff_norm(), tol))
    raise(ErrorCode::usage, "lines do not intersect");
  if (space == Space::M4 &&
      !approx_zero(regressive_join(an, bn),
                   an.coeff_norm() * bn.coeff_norm(), tol))
    raise(ErrorCode::usage, "lines do not intersect");

  const double c = proper_square_sign(space, Role::line) *
                   scalar_part(inner(an, bn));
  return {Measure::of(std::acosh(std::max(c, 1.0))), {}};
}

namespace {

Measure joined_scalar_measure(const std::vector<const Entity*>& points,
                              double factorial, const char* op, Space space,
                              const Tolerance& tol) {
  std::vector<Multivector> norm_pts;
  for (const Entity* p : points) {
    require_space(*p, space, op);
    require_role(*p, Role::point, op);
    norm_pts.push_back(normalized(p->mv(), tol));
  }
  for (std::size_t i = 0; i < norm_pts.size(); ++i) {
    for (std::size_t j = i + 1; j < norm_pts.size(); ++j) {
      const Multivector line = regressive_join(norm_pts[i], norm_pts[j]);
      if (approx_zero(line, 1.0, tol)) continue;  // coincident points
      switch (join_kind(line, Role::line, tol)) {
        case MetricKind::proper:
          break;
        case MetricKind::null_kind:
          return Measure::undefined(Measure::Status::undefined_null);
        case MetricKind::improper:
          return Measure::undefined(Measure::Status::undefined_improper);
      }
    }
  }
  Multivector joined = norm_pts[0];
  for (std::size_t i = 1; i < norm_pts.size(); ++i)
    joined = regressive_join(joined, norm_pts[i]);
  return Measure::of(std::abs(scalar_part(joined)) / factorial);
}

}  // namespace

Measure triangle_area(const Entity& p, const Entity& q, const Entity& r,
                      const Tolerance& tol) {
  return joined_scalar_measure({&p, &q, &r}, 2.0, "area", Space::M2, tol);
}

Measure simplex_volume(const Entity& p, const Entity& q, const Entity& r,
                       const Entity& s, const Tolerance& tol) {
  return joined_scalar_measure({&p, &q, &r, &s}, 6.0, "volume", Space::M3,
                               tol);
}

Entity parametrize_line_m2(double d, double phi, OrientationTag orient) {
  if (orient == OrientationTag::not_applicable)
    raise(ErrorCode::usage, "orientation must be future or past");
  const double sign = orient == OrientationTag::future ? 1.0 : -1.0;
  return make_line(Space::M2,
                   {sign * d, sign * std::cosh(phi), -sign * std::sinh(phi)});
}

LineParamsM2 line_params_m2(const Entity& a, const Tolerance& tol) {
  require_space(a, Space::M2, "line parametrization");
  require_role(a, Role::line, "line parametrization");
  const Classification c = classify(a, tol);
  if (c.metric_kind != MetricKind::proper || c.locus != Locus::finite)
    raise(ErrorCode::parametrization_error,
          "only finite proper lines have the (d, phi) parametrization");
  Multivector v = normalized(a.mv(), tol);
  const bool future = c.orientation == OrientationTag::future;
  if (!future) v = -v;
  LineParamsM2 out{};
  out.d = v.coeff(0b001);
  out.phi = std::asinh(-v.coeff(0b100));
  out.orient = future ? OrientationTag::future : OrientationTag::past;
  return out;
}

Entity worldline_m3(double alpha, double phi) {
  const Signature& sig = Signature::m3();
  Multivector mv =
      Multivector::blade(sig, {2, 3}, std::cos(alpha) * std::sinh(phi)) +
      Multivector::blade(sig, {3, 1}, std::sin(alpha) * std::sinh(phi)) +
      Multivector::blade(sig, {1, 2}, std::cosh(phi));
  return Entity(std::move(mv), Role::line);
}

Entity worldline_m4(double alpha, double beta, double phi) {
  const Signature& sig = Signature::m4();
  const double sh = std::sinh(phi);
  Multivector mv =
      Multivector::blade(sig, {2, 3, 4},
                         std::cos(alpha) * std::sin(beta) * sh) +
      Multivector::blade(sig, {3, 1, 4},
                         std::sin(alpha) * std::sin(beta) * sh) +
      Multivector::blade(sig, {1, 2, 4}, std::cos(beta) * sh) +
      Multivector::blade(sig, {3, 2, 1}, std::cosh(phi));
  return Entity(std::move(mv), Role::line);
}

namespace {

Multivector origin_worldline_part(const Entity& line, const Tolerance& tol,
                                  const char* op) {
  const Classification c = classify(line, tol);
  if (c.metric_kind != MetricKind::proper)
    raise(ErrorCode::parametrization_error,
          std::string(op) + " requires a proper line");
  const Multivector mv = normalized(line.mv(), tol);
  if (!approx_zero(mv - finite_part(mv), mv.coeff_norm(), tol))
    raise(ErrorCode::parametrization_error,
          std::string(op) + " requires a line through the origin");
  return mv;
}

}  // namespace

WorldlineParams worldline_params_m3(const Entity& line, const Tolerance& tol) {
  require_space(line, Space::M3, "worldline parametrization");
  require_role(line, Role::line, "worldline parametrization");
  Multivector v = origin_worldline_part(line, tol, "worldline parametrization");
  if (v.coeff(0b0110) < 0) v = -v;  // canonical form has p12 = cosh(phi) > 0
  const double p23 = v.coeff(0b1100);
  const double p31 = -v.coeff(0b1010);
  WorldlineParams out;
  out.phi = std::asinh(std::hypot(p23, p31));
  out.alpha = (p23 == 0.0 && p31 == 0.0) ? 0.0 : std::atan2(p31, p23);
  return out;
}

WorldlineParams worldline_params_m4(const Entity& line, const Tolerance& tol) {
  require_space(line, Space::M4, "worldline parametrization");
  require_role(line, Role::line, "worldline parametrization");
  Multivector v = origin_worldline_part(line, tol, "worldline parametrization");
  if (-v.coeff(0b01110) < 0) v = -v;  // s321 = cosh(phi) > 0
  const double s234 = v.coeff(0b11100);
  const double s314 = -v.coeff(0b11010);
  const double s124 = v.coeff(0b10110);
  const double space_norm = std::hypot(s234, s314, s124);
  WorldlineParams out;
  out.phi = std::asinh(space_norm);
  out.beta = space_norm == 0.0 ? 0.0 : std::atan2(std::hypot(s234, s314), s124);
  out.alpha = (s234 == 0.0 && s314 == 0.0) ? 0.0 : std::atan2(s314, s234);
  return out;
}

Multivector blade_inverse(const Multivector& b, const Tolerance& tol) {
  const Multivector rb = reverse(b);
  const double s = scalar_part(geometric_product(b, rb));
  const double scale2 = b.coeff_norm() * b.coeff_norm();
  if (std::abs(s) <= std::max(tol.abs, tol.rel * scale2))
    raise(ErrorCode::not_invertible, "null blades are not invertible");
  return rb / s;
}

namespace {

int operand_grade(const Multivector& a, const Tolerance& tol) {
  auto g = homogeneous_grade(a, tol);
  if (!g)
    raise(ErrorCode::non_homogeneous,
          "projection operations expect homogeneous operands");
  return *g;
}

}  // namespace

Multivector project(const Multivector& a, const Multivector& b,
                    const Tolerance& tol) {
  const int g = operand_grade(a, tol);
  return grade_select(geometric_product(inner(a, b), blade_inverse(b, tol)),
                      g);
}

Multivector reject(const Multivector& a, const Multivector& b,
                   const Tolerance& tol) {
  const int g = operand_grade(a, tol);
  return grade_select(geometric_product(wedge(a, b), blade_inverse(b, tol)),
                      g);
}

Multivector reflect(const Multivector& mirror, const Multivector& a,
                    const Tolerance& tol) {
  const int g = operand_grade(a, tol);
  Multivector out = grade_select(
      geometric_product(geometric_product(mirror, a),
                        blade_inverse(mirror, tol)),
      g);
  // Bivector objects in M3/M4 carry a sign so the transported bottom-up
  // orientation matches the mirror image; everything else is the plain
  // sandwich.
  if (g == 2 && a.signature().dim_total() >= 4) out = -out;
  return out;
}

Multivector scale(const Multivector& a, const Multivector& b, double k,
                  const Tolerance& tol) {
  return project(a, b, tol) + reject(a, b, tol) * k;
}

}  // namespace mpga
