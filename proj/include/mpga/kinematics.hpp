#pragma once

#include "mpga/entity.hpp"

namespace mpga {

/// Velocities and events in units with c = 1.
struct Vel2 {
  double x = 0.0;
  double y = 0.0;
};
struct Vel3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct EventM2 {
  double x = 0.0;
  double t = 0.0;
};
struct EventM3 {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};
struct EventM4 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;
};

/// (1 - v^2)^(-1/2); |v| >= 1 is a superluminal error.
double lorentz_gamma(double speed);

/// u' = (u + v) / (1 + u v).
double add_velocity_m2(double u, double v);

Vel2 boost_velocity_m3(const Vel2& u, const Vel2& v);
Vel3 boost_velocity_m4(const Vel3& u, const Vel3& v);

EventM2 lorentz_m2(const EventM2& e, double v);
EventM3 lorentz_m3(const EventM3& e, const Vel2& v);
EventM4 lorentz_m4(const EventM4& e, const Vel3& v);

/// Velocity of a boost parametrized by its direction angles and rapidity.
Vel2 velocity_from_angles_m3(double alpha, double phi);
Vel3 velocity_from_angles_m4(double alpha, double beta, double phi);
inline EventM4 lorentz_m4(const EventM4& e, double alpha_b, double beta_b,
                          double phi_b) {
  return lorentz_m4(e, velocity_from_angles_m4(alpha_b, beta_b, phi_b));
}

/// Velocity parameters of a proper simple line that need not pass through
/// the origin: the e0-free part is the parallel line through the origin,
/// whose worldline parametrization is inverted.
Vel2 line_velocity_m3(const Entity& line, const Tolerance& tol = {});
Vel3 line_velocity_m4(const Entity& line, const Tolerance& tol = {});

}  // namespace mpga
