#include "mpga/kinematics.hpp"

#include <cmath>

#include "mpga/measures.hpp"

namespace mpga {

namespace {

void require_subluminal(double speed) {
  if (!(speed < 1.0))
    raise(ErrorCode::superluminal, "speeds must satisfy |v| < 1 (c = 1)");
}

}  // namespace

double lorentz_gamma(double speed) {
  speed = std::abs(speed);
  require_subluminal(speed);
  return 1.0 / std::sqrt(1.0 - speed * speed);
}

double add_velocity_m2(double u, double v) {
  require_subluminal(std::abs(u));
  require_subluminal(std::abs(v));
  return (u + v) / (1.0 + u * v);
}

Vel2 boost_velocity_m3(const Vel2& u, const Vel2& v) {
  require_subluminal(std::hypot(u.x, u.y));
  const double g = lorentz_gamma(std::hypot(v.x, v.y));
  const double dot = u.x * v.x + u.y * v.y;
  const double denom = 1.0 + dot;
  const double stretch = dot * g / (g + 1.0);
  return {(u.x / g + v.x + v.x * stretch) / denom,
          (u.y / g + v.y + v.y * stretch) / denom};
}

Vel3 boost_velocity_m4(const Vel3& u, const Vel3& v) {
  require_subluminal(std::hypot(u.x, u.y, u.z));
  const double g = lorentz_gamma(std::hypot(v.x, v.y, v.z));
  const double dot = u.x * v.x + u.y * v.y + u.z * v.z;
  const double denom = 1.0 + dot;
  const double stretch = dot * g / (g + 1.0);
  return {(u.x / g + v.x + v.x * stretch) / denom,
          (u.y / g + v.y + v.y * stretch) / denom,
          (u.z / g + v.z + v.z * stretch) / denom};
}

EventM2 lorentz_m2(const EventM2& e, double v) {
  const double g = lorentz_gamma(v);
  return {g * (e.x + e.t * v), g * (e.t + e.x * v)};
}

EventM3 lorentz_m3(const EventM3& e, const Vel2& v) {
  const double g = lorentz_gamma(std::hypot(v.x, v.y));
  const double dot = e.x * v.x + e.y * v.y;
  // (g - 1) / v^2 written without the 0/0 at v = 0.
  const double stretch = dot * g * g / (g + 1.0);
  return {e.x + g * e.t * v.x + stretch * v.x,
          e.y + g * e.t * v.y + stretch * v.y, g * (e.t + dot)};
}

EventM4 lorentz_m4(const EventM4& e, const Vel3& v) {
  const double g = lorentz_gamma(std::hypot(v.x, v.y, v.z));
  const double dot = e.x * v.x + e.y * v.y + e.z * v.z;
  const double stretch = dot * g * g / (g + 1.0);
  return {e.x + g * e.t * v.x + stretch * v.x,
          e.y + g * e.t * v.y + stretch * v.y,
          e.z + g * e.t * v.z + stretch * v.z, g * (e.t + dot)};
}

Vel2 velocity_from_angles_m3(double alpha, double phi) {
  const double u = std::tanh(phi);
  return {std::cos(alpha) * u, std::sin(alpha) * u};
}

Vel3 velocity_from_angles_m4(double alpha, double beta, double phi) {
  const double u = std::tanh(phi);
  return {std::cos(alpha) * std::sin(beta) * u,
          std::sin(alpha) * std::sin(beta) * u, std::cos(beta) * u};
}

Vel2 line_velocity_m3(const Entity& line, const Tolerance& tol) {
  const Entity origin_line(
      finite_part(line.mv()), Role::line, tol);
  const WorldlineParams p = worldline_params_m3(origin_line, tol);
  return velocity_from_angles_m3(p.alpha, p.phi);
}

Vel3 line_velocity_m4(const Entity& line, const Tolerance& tol) {
  const Entity origin_line(finite_part(line.mv()), Role::line, tol);
  const WorldlineParams p = worldline_params_m4(origin_line, tol);
  return velocity_from_angles_m4(p.alpha, p.beta, p.phi);
}

}  // namespace mpga
