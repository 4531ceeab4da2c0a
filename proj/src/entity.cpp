#include "mpga/entity.hpp"

#include <cmath>

namespace mpga {

int role_grade(Space space, Role role) {
  switch (space) {
    case Space::M2:
      if (role == Role::line) return 1;
      if (role == Role::point) return 2;
      break;
    case Space::M3:
      if (role == Role::plane) return 1;
      if (role == Role::line) return 2;
      if (role == Role::point) return 3;
      break;
    case Space::M4:
      if (role == Role::hyperplane) return 1;
      if (role == Role::plane) return 2;
      if (role == Role::line) return 3;
      if (role == Role::point) return 4;
      break;
    default:
      break;
  }
  raise(ErrorCode::usage,
        "role " + role_name(role) + " does not exist in this space");
}

std::optional<Role> grade_role(Space space, int grade) {
  switch (space) {
    case Space::M2:
      if (grade == 1) return Role::line;
      if (grade == 2) return Role::point;
      break;
    case Space::M3:
      if (grade == 1) return Role::plane;
      if (grade == 2) return Role::line;
      if (grade == 3) return Role::point;
      break;
    case Space::M4:
      if (grade == 1) return Role::hyperplane;
      if (grade == 2) return Role::plane;
      if (grade == 3) return Role::line;
      if (grade == 4) return Role::point;
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::string role_name(Role role) {
  switch (role) {
    case Role::point:
      return "point";
    case Role::line:
      return "line";
    case Role::plane:
      return "plane";
    case Role::hyperplane:
      return "hyperplane";
  }
  return "?";
}

int proper_square_sign(Space space, Role role) {
  // Vectors are proper with positive square; the sign reverses for M3/M4
  // lines, M4 planes, and M4 points.
  switch (space) {
    case Space::M2:
      return 1;
    case Space::M3:
      return role == Role::line ? -1 : 1;
    case Space::M4:
      return (role == Role::hyperplane) ? 1 : -1;
    default:
      raise(ErrorCode::usage, "classification is defined for M2/M3/M4 only");
  }
}

Multivector finite_part(const Multivector& a) {
  Multivector::Coeffs out = a.coeffs();
  for (int i = 0; i < a.size(); ++i)
    if (i & 1) out[i] = 0.0;  // blades containing e0
  return Multivector(a.signature(), std::move(out));
}

namespace {

bool is_simple(const Multivector& mv, Space space, Role role,
               const Tolerance& tol) {
  const double scale = mv.coeff_norm() * mv.coeff_norm();
  if ((space == Space::M3 && role == Role::line) ||
      (space == Space::M4 && role == Role::plane))
    return approx_zero(wedge(mv, mv), scale, tol);
  if (space == Space::M4 && role == Role::line)
    return approx_zero(regressive_join(mv, mv), scale, tol);
  return true;
}

Multivector orientation_reference(const Signature& sig) {
  switch (sig.tag()) {
    case Space::M2:
      return Multivector::blade(sig, {1});
    case Space::M3:
      return Multivector::blade(sig, {1, 2});
    case Space::M4:
      // Pairs with the t-axis line e321 so that worldline-style lines with
      // cosh(phi) on e321 come out past-oriented, matching M3.
      return Multivector::blade(sig, {3, 2, 1});
    default:
      raise(ErrorCode::usage, "orientation is defined for M2/M3/M4 only");
  }
}

}  // namespace

Classification classify(const Multivector& mv, Role role,
                        const Tolerance& tol) {
  const Space space = mv.signature().tag();
  const double scale = mv.coeff_norm();

  Classification c{};
  c.locus = approx_zero(finite_part(mv), scale, tol) ? Locus::at_infinity
                                                     : Locus::finite;

  const double square = metric_square(mv);
  if (std::abs(square) <= tol.rel * scale * scale)
    c.metric_kind = MetricKind::null_kind;
  else if (square * proper_square_sign(space, role) > 0)
    c.metric_kind = MetricKind::proper;
  else
    c.metric_kind = MetricKind::improper;

  c.orientation = OrientationTag::not_applicable;
  if (role == Role::line && c.metric_kind == MetricKind::proper &&
      c.locus == Locus::finite) {
    const double pairing =
        scalar_part(inner(mv, orientation_reference(mv.signature())));
    c.orientation =
        pairing > 0 ? OrientationTag::future : OrientationTag::past;
  }
  return c;
}

std::string to_string(const Classification& c) {
  std::string s;
  switch (c.metric_kind) {
    case MetricKind::proper:
      s = "proper";
      break;
    case MetricKind::improper:
      s = "improper";
      break;
    case MetricKind::null_kind:
      s = "null";
      break;
  }
  s += c.locus == Locus::finite ? ",finite" : ",at_infinity";
  switch (c.orientation) {
    case OrientationTag::future:
      s += ",future";
      break;
    case OrientationTag::past:
      s += ",past";
      break;
    case OrientationTag::not_applicable:
      break;
  }
  return s;
}

Entity::Entity(Multivector mv, Role role, const Tolerance& tol)
    : mv_(std::move(mv)), role_(role), class_{} {
  const int expected = role_grade(mv_.signature().tag(), role);
  auto g = homogeneous_grade(mv_, tol);
  if (!g || (*g != expected && !mv_.is_zero()))
    raise(ErrorCode::invalid_entity,
          "multivector grade does not match role " + role_name(role));
  if (!is_simple(mv_, mv_.signature().tag(), role, tol))
    raise(ErrorCode::invalid_entity,
          role_name(role) + " must be a simple blade");
  class_ = classify(mv_, role_, tol);
}

Entity Entity::from(Multivector mv, const Tolerance& tol) {
  auto g = homogeneous_grade(mv, tol);
  if (!g)
    raise(ErrorCode::invalid_entity,
          "entities must be homogeneous multivectors");
  auto role = grade_role(mv.signature().tag(), *g);
  if (!role)
    raise(ErrorCode::invalid_entity,
          "grade " + std::to_string(*g) + " has no geometric role here");
  return Entity(std::move(mv), *role, tol);
}

Entity Entity::normalized(const Tolerance& tol) const {
  return Entity(mpga::normalized(mv_, tol), role_, tol);
}

OrientationTag orientation(const Entity& e, const Tolerance& tol) {
  const Classification c = classify(e, tol);
  if (e.role() != Role::line || c.metric_kind != MetricKind::proper)
    raise(ErrorCode::undefined_orientation,
          "orientation is defined for proper lines only");
  return c.orientation;
}

namespace {

Entity from_coords(Space space, Role role,
                   const std::vector<std::initializer_list<int>>& basis,
                   const std::vector<double>& coords, const Tolerance& tol) {
  const Signature& sig = Signature::for_space(space);
  if (coords.size() != basis.size())
    raise(ErrorCode::usage, role_name(role) + " in " + sig.name() +
                                " takes " + std::to_string(basis.size()) +
                                " coordinates");
  Multivector mv(sig);
  for (std::size_t i = 0; i < basis.size(); ++i)
    mv = mv + Multivector::blade(sig, basis[i], coords[i]);
  return Entity(std::move(mv), role, tol);
}

}  // namespace

Entity make_point(Space space, const std::vector<double>& coords) {
  switch (space) {
    case Space::M2:
      return from_coords(space, Role::point, {{1, 2}, {2, 0}, {0, 1}}, coords,
                         {});
    case Space::M3:
      return from_coords(space, Role::point,
                         {{1, 2, 3}, {3, 2, 0}, {1, 3, 0}, {2, 1, 0}}, coords,
                         {});
    case Space::M4:
      return from_coords(
          space, Role::point,
          {{1, 2, 3, 4}, {2, 3, 4, 0}, {3, 1, 4, 0}, {1, 2, 4, 0}, {3, 2, 1, 0}},
          coords, {});
    default:
      raise(ErrorCode::usage, "points exist in M2/M3/M4 only");
  }
}

Entity make_line(Space space, const std::vector<double>& coords,
                 const Tolerance& tol) {
  switch (space) {
    case Space::M2:
      return from_coords(space, Role::line, {{0}, {1}, {2}}, coords, tol);
    case Space::M3:
      return from_coords(space, Role::line,
                         {{1, 0}, {2, 0}, {3, 0}, {2, 3}, {3, 1}, {1, 2}},
                         coords, tol);
    case Space::M4:
      return from_coords(space, Role::line,
                         {{2, 1, 0},
                          {3, 1, 0},
                          {4, 1, 0},
                          {3, 2, 0},
                          {4, 2, 0},
                          {4, 3, 0},
                          {2, 3, 4},
                          {3, 1, 4},
                          {1, 2, 4},
                          {3, 2, 1}},
                         coords, tol);
    default:
      raise(ErrorCode::usage, "lines exist in M2/M3/M4 only");
  }
}

Entity make_plane(Space space, const std::vector<double>& coords,
                  const Tolerance& tol) {
  switch (space) {
    case Space::M3:
      return from_coords(space, Role::plane, {{0}, {1}, {2}, {3}}, coords,
                         tol);
    case Space::M4:
      return from_coords(space, Role::plane,
                         {{1, 0},
                          {2, 0},
                          {3, 0},
                          {4, 0},
                          {4, 1},
                          {4, 2},
                          {4, 3},
                          {2, 3},
                          {3, 1},
                          {1, 2}},
                         coords, tol);
    default:
      raise(ErrorCode::usage, "planes exist in M3/M4 only");
  }
}

Entity make_hyperplane(Space space, const std::vector<double>& coords) {
  if (space != Space::M4)
    raise(ErrorCode::usage, "hyperplanes exist in M4 only");
  return from_coords(space, Role::hyperplane, {{0}, {1}, {2}, {3}, {4}},
                     coords, {});
}

}  // namespace mpga
