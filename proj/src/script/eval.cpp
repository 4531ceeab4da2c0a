#include "mpga/script/eval.hpp"

#include <cmath>
#include <cstdio>

#include "mpga/kinematics.hpp"
#include "mpga/render.hpp"

namespace mpga::script {

namespace {

std::string format17(double v) {
  if (v == 0.0) v = 0.0;  // print negative zero as 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const DisplayBlade& named_blade(const Signature& sig, const std::string& name) {
  for (const DisplayBlade& b : display_basis(sig))
    if (b.name == name) return b;
  raise(ErrorCode::usage, "no display blade " + name);
}

std::string regime_name(DecompRegime regime) {
  switch (regime) {
    case DecompRegime::simple:
      return "simple";
    case DecompRegime::two_finite_axes:
      return "two_finite_axes";
    case DecompRegime::finite_plus_infinity:
      return "finite_plus_infinity";
    case DecompRegime::null_nonunique:
      return "null_nonunique";
    case DecompRegime::irreducible:
      return "irreducible";
  }
  return "?";
}

}  // namespace

std::string render(const Value& value) {
  struct Visitor {
    std::string operator()(double v) const { return format_coeff(v); }
    std::string operator()(const Multivector& v) const { return to_string(v); }
    std::string operator()(const Spinor& v) const { return to_string(v.mv()); }
    std::string operator()(const Measure& v) const {
      if (v.defined()) return format_coeff(v.value);
      return "undefined(" + v.reason() + ")";
    }
    std::string operator()(const Classification& v) const {
      return to_string(v);
    }
    std::string operator()(const BivectorDecomposition& v) const {
      return regime_name(v.regime) + ": part1 = " + to_string(v.part1) +
             "; part2 = " + to_string(v.part2);
    }
    std::string operator()(const Tuple& v) const {
      std::string out = "(";
      for (std::size_t i = 0; i < v.values.size(); ++i) {
        if (i) out += ", ";
        out += format_coeff(v.values[i]);
      }
      if (!v.tag.empty()) {
        if (!v.values.empty()) out += ", ";
        out += v.tag;
      }
      return out + ")";
    }
    std::string operator()(const OrbitTable& v) const { return orbit_csv(v); }
  };
  return std::visit(Visitor{}, value.data);
}

std::vector<std::string> point_coord_names(Space space) {
  switch (space) {
    case Space::M2:
      return {"x", "t"};
    case Space::M3:
      return {"x", "y", "t"};
    default:
      return {"x", "y", "z", "t"};
  }
}

std::vector<double> point_coords(const Multivector& point) {
  const Signature& sig = point.signature();
  std::vector<std::string> blades;
  std::string weight;
  switch (sig.tag()) {
    case Space::M2:
      weight = "e12";
      blades = {"e20", "e01"};
      break;
    case Space::M3:
      weight = "e123";
      blades = {"e320", "e130", "e210"};
      break;
    case Space::M4:
      weight = "e1234";
      blades = {"e2340", "e3140", "e1240", "e3210"};
      break;
    default:
      raise(ErrorCode::usage, "points have coordinates in M2/M3/M4 only");
  }
  const DisplayBlade& wb = named_blade(sig, weight);
  const double w = point.coeff(wb.mask) * wb.sign;
  if (std::abs(w) <= 1e-9 * point.coeff_norm())
    raise(ErrorCode::usage, "point at infinity has no affine coordinates");
  std::vector<double> out;
  for (const std::string& name : blades) {
    const DisplayBlade& b = named_blade(sig, name);
    out.push_back(point.coeff(b.mask) * b.sign / w);
  }
  return out;
}

std::string orbit_csv(const OrbitTable& table) {
  std::string out = "theta";
  if (!table.samples.empty()) {
    for (const std::string& name :
         point_coord_names(table.samples.front().entity.space()))
      out += "," + name;
  }
  for (const OrbitSample& s : table.samples) {
    out += "\n" + format17(s.theta);
    for (double c : point_coords(s.entity.mv())) out += "," + format17(c);
  }
  return out;
}

const Value* Evaluator::lookup(const std::string& name) const {
  auto it = env_.find(name);
  return it == env_.end() ? nullptr : &it->second;
}

std::string emit_orbit(const Evaluator& env, const std::string& generator,
                       const std::string& entity, double theta_from,
                       double theta_to, int steps) {
  auto bound_mv = [&](const std::string& name) {
    const Value* v = env.lookup(name);
    if (!v) raise(ErrorCode::usage, "unbound name '" + name + "'");
    if (const Multivector* m = std::get_if<Multivector>(&v->data)) return *m;
    if (const Spinor* s = std::get_if<Spinor>(&v->data)) return s->mv();
    raise(ErrorCode::usage, "'" + name + "' is not a multivector");
  };
  const Multivector gen = bound_mv(generator);
  const Entity point = Entity::from(bound_mv(entity), env.tolerance());
  OrbitTable table{
      orbit(gen, point, theta_from, theta_to, steps, env.tolerance())};
  return orbit_csv(table);
}

void Evaluator::run(const Script& script) {
  for (const Statement& st : script.statements) {
    Value v = eval(*st.expr);
    if (st.kind == Statement::Kind::binding)
      env_.emplace(st.name, std::move(v));
    else
      output_ += render(v) + "\n";
  }
}

namespace {

[[noreturn]] void fail(const Expr& at, const std::string& what) {
  throw EvalError(at.line, at.col, what);
}

double as_scalar(const Value& v, const Expr& at) {
  if (const double* d = std::get_if<double>(&v.data)) return *d;
  if (const Measure* m = std::get_if<Measure>(&v.data)) {
    if (m->defined()) return m->value;
    fail(at, "undefined(" + m->reason() + ") used as a number");
  }
  fail(at, "expected a scalar value");
}

bool is_mv_like(const Value& v) {
  return std::holds_alternative<Multivector>(v.data) ||
         std::holds_alternative<Spinor>(v.data);
}

Multivector as_mv(const Value& v, const Signature& sig, const Expr& at) {
  if (const Multivector* m = std::get_if<Multivector>(&v.data)) return *m;
  if (const Spinor* s = std::get_if<Spinor>(&v.data)) return s->mv();
  if (const double* d = std::get_if<double>(&v.data))
    return Multivector::scalar(sig, *d);
  if (const Measure* m = std::get_if<Measure>(&v.data)) {
    if (m->defined()) return Multivector::scalar(sig, m->value);
    fail(at, "undefined(" + m->reason() + ") used as a value");
  }
  fail(at, "expected a multivector value");
}

}  // namespace

Value Evaluator::eval(const Expr& e) {
  const Signature& sig = Signature::for_space(space_);
  try {
    switch (e.kind) {
      case Expr::Kind::number:
        return {e.number};
      case Expr::Kind::blade: {
        std::vector<int> idx;
        for (char c : e.name) idx.push_back(c - '0');
        Multivector mv(sig);
        // Build through the initializer form to fold the permutation sign.
        switch (idx.size()) {
          case 1:
            mv = Multivector::blade(sig, {idx[0]});
            break;
          case 2:
            mv = Multivector::blade(sig, {idx[0], idx[1]});
            break;
          case 3:
            mv = Multivector::blade(sig, {idx[0], idx[1], idx[2]});
            break;
          case 4:
            mv = Multivector::blade(sig, {idx[0], idx[1], idx[2], idx[3]});
            break;
          default:
            mv = Multivector::blade(
                sig, {idx[0], idx[1], idx[2], idx[3], idx[4]});
            break;
        }
        return {mv};
      }
      case Expr::Kind::ident: {
        const Value* v = lookup(e.name);
        if (!v) fail(e, "unknown identifier '" + e.name + "'");
        return *v;
      }
      case Expr::Kind::unary_minus: {
        Value v = eval(*e.args[0]);
        if (const double* d = std::get_if<double>(&v.data)) return {-*d};
        if (is_mv_like(v)) return {-as_mv(v, sig, e)};
        if (const Measure* m = std::get_if<Measure>(&v.data)) {
          if (m->defined()) return {-m->value};
        }
        fail(e, "cannot negate this value");
      }
      case Expr::Kind::binary: {
        Value lhs = eval(*e.args[0]);
        Value rhs = eval(*e.args[1]);
        const bool lhs_mv = is_mv_like(lhs);
        const bool rhs_mv = is_mv_like(rhs);
        switch (e.op) {
          case '+':
          case '-': {
            if (!lhs_mv && !rhs_mv) {
              const double a = as_scalar(lhs, e), b = as_scalar(rhs, e);
              return {e.op == '+' ? a + b : a - b};
            }
            const Multivector a = as_mv(lhs, sig, e);
            const Multivector b = as_mv(rhs, sig, e);
            return {e.op == '+' ? a + b : a - b};
          }
          case '*': {
            if (!lhs_mv && !rhs_mv)
              return {as_scalar(lhs, e) * as_scalar(rhs, e)};
            if (!lhs_mv) return {as_mv(rhs, sig, e) * as_scalar(lhs, e)};
            if (!rhs_mv) return {as_mv(lhs, sig, e) * as_scalar(rhs, e)};
            return {geometric_product(as_mv(lhs, sig, e), as_mv(rhs, sig, e))};
          }
          case '/': {
            const double b = as_scalar(rhs, e);
            if (b == 0.0) fail(e, "division by zero");
            if (!lhs_mv) return {as_scalar(lhs, e) / b};
            return {as_mv(lhs, sig, e) / b};
          }
          case '^':
            return {wedge(as_mv(lhs, sig, e), as_mv(rhs, sig, e))};
          case '.':
            return {inner(as_mv(lhs, sig, e), as_mv(rhs, sig, e))};
          case 'x':
            return {commutator(as_mv(lhs, sig, e), as_mv(rhs, sig, e))};
          case '&':
            return {
                regressive_join(as_mv(lhs, sig, e), as_mv(rhs, sig, e))};
          default:
            fail(e, "unknown operator");
        }
      }
      case Expr::Kind::call:
        return eval_call(e);
    }
    fail(e, "unreachable expression kind");
  } catch (const Error& err) {
    throw EvalError(e.line, e.col, err.what());
  }
}

Value Evaluator::eval_call(const Expr& e) {
  const Signature& sig = Signature::for_space(space_);
  auto scalar_arg = [&](int i) { return as_scalar(eval(*e.args[i]), *e.args[i]); };
  auto mv_arg = [&](int i) { return as_mv(eval(*e.args[i]), sig, *e.args[i]); };
  auto entity_arg = [&](int i) { return Entity::from(mv_arg(i), tol_); };
  auto scalars = [&]() {
    std::vector<double> out;
    for (std::size_t i = 0; i < e.args.size(); ++i)
      out.push_back(scalar_arg(static_cast<int>(i)));
    return out;
  };
  const std::string& f = e.name;

  if (f == "point") return {make_point(space_, scalars()).mv()};
  if (f == "line") return {make_line(space_, scalars(), tol_).mv()};
  if (f == "plane") return {make_plane(space_, scalars(), tol_).mv()};
  if (f == "hyperplane") return {make_hyperplane(space_, scalars()).mv()};
  if (f == "exp") return {exp_bivector(mv_arg(0), tol_)};
  if (f == "apply") {
    Value s = eval(*e.args[0]);
    const Spinor* sp = std::get_if<Spinor>(&s.data);
    const Spinor spinor =
        sp ? *sp : Spinor(as_mv(s, sig, *e.args[0]));
    return {apply(spinor, mv_arg(1))};
  }
  if (f == "boost") {
    switch (space_) {
      case Space::M2:
        return {make_rotation_m2(make_point(space_, {-1, 0, 0}),
                                 scalar_arg(0), tol_)};
      case Space::M3:
        return {make_boost_m3(scalar_arg(0), scalar_arg(1))};
      default:
        return {make_boost_m4(scalar_arg(0), scalar_arg(1), scalar_arg(2))};
    }
  }
  if (f == "rotate") {
    if (space_ == Space::M2)
      return {make_rotation_m2(entity_arg(0), scalar_arg(1), tol_)};
    Multivector axis = mv_arg(0);
    const double s = metric_square(axis);
    if (std::abs(s) >
        std::max(tol_.abs, tol_.rel * axis.coeff_norm() * axis.coeff_norm()))
      axis = axis / norm(axis);
    return {exp_bivector(axis * (-0.5 * scalar_arg(1)), tol_)};
  }
  if (f == "translate")
    return {make_translation(entity_arg(0), scalar_arg(1), tol_)};
  if (f == "worldline") {
    if (space_ == Space::M3)
      return {worldline_m3(scalar_arg(0), scalar_arg(1)).mv()};
    return {worldline_m4(scalar_arg(0), scalar_arg(1), scalar_arg(2)).mv()};
  }
  if (f == "distance") {
    const Entity a = entity_arg(0);
    const Entity b = entity_arg(1);
    const bool a_vec = role_grade(space_, a.role()) == 1;
    const bool b_vec = role_grade(space_, b.role()) == 1;
    if (a.role() == Role::point && b.role() == Role::point)
      return {distance_points(a, b, tol_)};
    if (a_vec && b.role() == Role::point)
      return {distance_line_point(a, b, tol_)};
    if (b_vec && a.role() == Role::point)
      return {distance_line_point(b, a, tol_)};
    if (a_vec && b_vec && space_ == Space::M2)
      return {distance_parallel_lines(a, b, tol_)};
    fail(e, "distance is defined for point/point, vector/point, and "
            "parallel M2 lines");
  }
  if (f == "angle") return {angle_lines(entity_arg(0), entity_arg(1), tol_).measure};
  if (f == "area")
    return {triangle_area(entity_arg(0), entity_arg(1), entity_arg(2), tol_)};
  if (f == "volume")
    return {simplex_volume(entity_arg(0), entity_arg(1), entity_arg(2),
                           entity_arg(3), tol_)};
  if (f == "decompose") {
    const Multivector m = mv_arg(0);
    auto g = homogeneous_grade(m, tol_);
    if (g && *g == 2)
      return {space_ == Space::M3 ? decompose_bivector_m3(m, tol_)
                                  : decompose_bivector_m4(m, tol_)};
    if (g && *g == 3 && space_ == Space::M4)
      return {decompose_trivector_m4(m, tol_)};
    fail(e, "decompose expects a bivector (or an M4 trivector)");
  }
  if (f == "orbit") {
    const double steps_raw = scalar_arg(4);
    const int steps = static_cast<int>(steps_raw);
    if (steps != steps_raw || steps < 2)
      fail(e, "orbit steps must be an integer >= 2");
    return {OrbitTable{orbit(mv_arg(0), entity_arg(1), scalar_arg(2),
                             scalar_arg(3), steps, tol_)}};
  }
  if (f == "gamma") return {lorentz_gamma(scalar_arg(0))};
  if (f == "add_velocity") {
    const std::vector<double> v = scalars();
    switch (space_) {
      case Space::M2:
        return {add_velocity_m2(v[0], v[1])};
      case Space::M3: {
        const Vel2 u = boost_velocity_m3({v[0], v[1]}, {v[2], v[3]});
        return {Tuple{{u.x, u.y}, ""}};
      }
      default: {
        const Vel3 u =
            boost_velocity_m4({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
        return {Tuple{{u.x, u.y, u.z}, ""}};
      }
    }
  }
  if (f == "lorentz") {
    const std::vector<double> v = scalars();
    switch (space_) {
      case Space::M2: {
        const EventM2 out = lorentz_m2({v[0], v[1]}, v[2]);
        return {Tuple{{out.x, out.t}, ""}};
      }
      case Space::M3: {
        const EventM3 out = lorentz_m3({v[0], v[1], v[2]}, {v[3], v[4]});
        return {Tuple{{out.x, out.y, out.t}, ""}};
      }
      default: {
        const EventM4 out =
            lorentz_m4({v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6]});
        return {Tuple{{out.x, out.y, out.z, out.t}, ""}};
      }
    }
  }
  if (f == "norm") return {norm(mv_arg(0))};
  if (f == "normalize") return {normalized(mv_arg(0), tol_)};
  if (f == "reverse") return {reverse(mv_arg(0))};
  if (f == "polar") return {polar(mv_arg(0))};
  if (f == "dual") return {complement(mv_arg(0))};
  if (f == "classify") return {classify(entity_arg(0), tol_)};
  if (f == "grade") {
    const double k = scalar_arg(1);
    if (k != std::floor(k) || k < 0)
      fail(e, "grade index must be a nonnegative integer");
    return {grade_select(mv_arg(0), static_cast<int>(k))};
  }
  if (f == "params") {
    const Entity line = entity_arg(0);
    switch (space_) {
      case Space::M2: {
        const LineParamsM2 p = line_params_m2(line, tol_);
        return {Tuple{{p.d, p.phi},
                      p.orient == OrientationTag::future ? "future" : "past"}};
      }
      case Space::M3: {
        const WorldlineParams p = worldline_params_m3(line, tol_);
        return {Tuple{{p.alpha, p.phi}, ""}};
      }
      default: {
        const WorldlineParams p = worldline_params_m4(line, tol_);
        return {Tuple{{p.alpha, p.beta, p.phi}, ""}};
      }
    }
  }
  if (f == "project") return {project(mv_arg(0), mv_arg(1), tol_)};
  if (f == "reject") return {reject(mv_arg(0), mv_arg(1), tol_)};
  if (f == "reflect") return {reflect(mv_arg(0), mv_arg(1), tol_)};
  if (f == "scale")
    return {scale(mv_arg(0), mv_arg(1), scalar_arg(2), tol_)};

  const double v = scalar_arg(0);
  if (f == "sqrt") {
    if (v < 0) fail(e, "sqrt of a negative number");
    return {std::sqrt(v)};
  }
  if (f == "abs") return {std::abs(v)};
  if (f == "sinh") return {std::sinh(v)};
  if (f == "cosh") return {std::cosh(v)};
  if (f == "tanh") return {std::tanh(v)};
  if (f == "asinh") return {std::asinh(v)};
  if (f == "acosh") {
    if (v < 1) fail(e, "acosh needs an argument >= 1");
    return {std::acosh(v)};
  }
  if (f == "atanh") {
    if (!(std::abs(v) < 1)) fail(e, "atanh needs |x| < 1");
    return {std::atanh(v)};
  }
  fail(e, "unknown function '" + f + "'");
}

}  // namespace mpga::script
