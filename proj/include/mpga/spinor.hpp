#pragma once

#include <optional>

#include "mpga/entity.hpp"

namespace mpga {

/// An even multivector S with S reverse(S) = 1, acting by the sandwich
/// S X reverse(S). The generator is kept when the spinor was built as
/// +-exp(A); spinors like -1 = (-e1)(e1) have none.
class Spinor {
 public:
  explicit Spinor(Multivector mv,
                  std::optional<Multivector> generator = std::nullopt);

  static Spinor identity(const Signature& sig) {
    return Spinor(Multivector::scalar(sig, 1.0));
  }

  const Multivector& mv() const { return mv_; }
  const std::optional<Multivector>& generator() const { return generator_; }

  Spinor reversed() const;
  Spinor operator*(const Spinor& other) const;

 private:
  Multivector mv_;
  std::optional<Multivector> generator_;
};

/// exp of a bivector, by invariant decomposition into commuting simple
/// axes: circular functions on axes with negative square, hyperbolic on
/// positive, 1 + axis on nilpotent axes. Irreducible null generators fall
/// back to an adaptive truncated power series.
Spinor exp_bivector(const Multivector& a, const Tolerance& tol = {});

/// Plain truncated series; exposed for cross-checking the closed forms.
Multivector exp_series(const Multivector& a, int max_terms = 64);

Multivector apply(const Spinor& s, const Multivector& x);
Entity apply(const Spinor& s, const Entity& x);

/// Rotation around a finite M2 point by phi (hyperbolic; a boost on lines).
Spinor make_rotation_m2(const Entity& center, double phi,
                        const Tolerance& tol = {});
/// Translation generated by e0 ^ a for a finite vector entity; a is
/// normalized first when not null.
Spinor make_translation(const Entity& a, double lambda,
                        const Tolerance& tol = {});
/// Boost in direction alpha: exp(-phi/2 (-e23 sin(alpha) + e31 cos(alpha))).
Spinor make_boost_m3(double alpha, double phi);
/// Boost around a given finite line parallel to the xy-plane, i.e. with
/// (e3 ^ axis)^2 = 0.
Spinor make_boost_m3(const Entity& axis, double phi,
                     const Tolerance& tol = {});
/// Euclidean rotation around a line perpendicular to the xy-plane
/// (e3 . axis = 0).
Spinor make_euclidean_m3(const Entity& axis, double alpha,
                         const Tolerance& tol = {});
Spinor make_boost_m4(double alpha, double beta, double phi);
Spinor make_euclidean_m4(double alpha_e, double beta_e, double alpha);

}  // namespace mpga
