#include "mpga/spinor.hpp"

#include <cmath>

#include "mpga/decompose.hpp"

namespace mpga {

namespace {

const Tolerance kSpinorTol{1e-12, 1e-12};

bool is_even(const Multivector& mv, const Tolerance& tol) {
  Multivector odd(mv.signature());
  for (int i = 0; i < mv.size(); ++i)
    if (grade_of(static_cast<BladeMask>(i)) & 1)
      odd = odd + Multivector::blade(mv.signature(),
                                     static_cast<BladeMask>(i), mv.coeff(i));
  return approx_zero(odd, mv.coeff_norm(), tol);
}

/// exp of a simple (or at-infinity) bivector axis by branch: circular for
/// negative square, hyperbolic for positive, 1 + axis for nilpotent.
Multivector exp_simple(const Multivector& axis, const Tolerance& tol) {
  const Signature& sig = axis.signature();
  const double s = metric_square(axis);
  const double band =
      std::max(tol.abs, tol.rel * axis.coeff_norm() * axis.coeff_norm());
  if (std::abs(s) <= band) return Multivector::scalar(sig, 1.0) + axis;
  if (s < 0) {
    const double r = std::sqrt(-s);
    return Multivector::scalar(sig, std::cos(r)) + axis * (std::sin(r) / r);
  }
  const double r = std::sqrt(s);
  return Multivector::scalar(sig, std::cosh(r)) + axis * (std::sinh(r) / r);
}

}  // namespace

Spinor::Spinor(Multivector mv, std::optional<Multivector> generator)
    : mv_(std::move(mv)), generator_(std::move(generator)) {
  if (!is_even(mv_, kSpinorTol))
    raise(ErrorCode::usage, "spinors are even multivectors");
  const Multivector closure = geometric_product(mv_, reverse(mv_));
  if (!approx_equal(closure, Multivector::scalar(mv_.signature(), 1.0),
                    kSpinorTol))
    raise(ErrorCode::usage, "spinor does not satisfy S reverse(S) = 1");
}

Spinor Spinor::reversed() const {
  std::optional<Multivector> gen;
  if (generator_) gen = -*generator_;
  return Spinor(reverse(mv_), std::move(gen));
}

Spinor Spinor::operator*(const Spinor& other) const {
  return Spinor(geometric_product(mv_, other.mv_));
}

Multivector exp_series(const Multivector& a, int max_terms) {
  Multivector term = Multivector::scalar(a.signature(), 1.0);
  Multivector sum = term;
  for (int k = 1; k <= max_terms; ++k) {
    term = geometric_product(term, a) / static_cast<double>(k);
    sum = sum + term;
    if (term.coeff_norm() < 1e-15 * sum.coeff_norm()) return sum;
  }
  raise(ErrorCode::convergence_failure,
        "bivector exponential series did not converge");
}

Spinor exp_bivector(const Multivector& a, const Tolerance& tol) {
  auto g = homogeneous_grade(a, tol);
  if (!g || (*g != 2 && !a.is_zero()))
    raise(ErrorCode::not_a_bivector, "exp expects a bivector generator");
  const Signature& sig = a.signature();
  if (a.is_zero()) return Spinor(Multivector::scalar(sig, 1.0), a);

  switch (sig.dim_total()) {
    case 3:
      return Spinor(exp_simple(a, tol), a);
    case 4: {
      BivectorDecomposition d = decompose_bivector_m3(a, tol);
      if (d.regime == DecompRegime::irreducible)
        return Spinor(exp_series(a), a);
      if (d.regime == DecompRegime::simple)
        return Spinor(exp_simple(d.part1, tol), a);
      return Spinor(geometric_product(exp_simple(d.part1, tol),
                                      exp_simple(d.part2, tol)),
                    a);
    }
    default: {
      BivectorDecomposition d = decompose_bivector_m4(a, tol);
      if (d.regime == DecompRegime::irreducible)
        return Spinor(exp_series(a), a);
      if (d.regime == DecompRegime::simple)
        return Spinor(exp_simple(d.part1, tol), a);
      return Spinor(geometric_product(exp_simple(d.part1, tol),
                                      exp_simple(d.part2, tol)),
                    a);
    }
  }
}

Multivector apply(const Spinor& s, const Multivector& x) {
  const Multivector full =
      geometric_product(geometric_product(s.mv(), x), reverse(s.mv()));
  // The sandwich is grade-preserving; drop the rounding dust that lands in
  // grades absent from the input.
  Multivector::Coeffs out = full.coeffs();
  unsigned grades_present = 0;
  for (int i = 0; i < x.size(); ++i)
    if (x.coeffs()[i] != 0.0)
      grades_present |= 1u << grade_of(static_cast<BladeMask>(i));
  for (int i = 0; i < full.size(); ++i)
    if (!(grades_present & (1u << grade_of(static_cast<BladeMask>(i)))))
      out[i] = 0.0;
  return Multivector(x.signature(), std::move(out));
}

Entity apply(const Spinor& s, const Entity& x) {
  return Entity(apply(s, x.mv()), x.role());
}

Spinor make_rotation_m2(const Entity& center, double phi,
                        const Tolerance& tol) {
  if (center.space() != Space::M2 || center.role() != Role::point)
    raise(ErrorCode::usage, "rotation centers in M2 are points");
  if (classify(center, tol).locus != Locus::finite)
    raise(ErrorCode::usage, "rotation center must be a finite point");
  const Multivector s = normalized(center.mv(), tol);
  return exp_bivector(s * (-0.5 * phi), tol);
}

Spinor make_translation(const Entity& a, double lambda, const Tolerance& tol) {
  if (role_grade(a.space(), a.role()) != 1)
    raise(ErrorCode::usage,
          "translations are generated by vector-grade entities");
  const Classification c = classify(a, tol);
  if (c.locus != Locus::finite)
    raise(ErrorCode::usage, "translation requires a finite entity");
  Multivector dir = a.mv();
  if (c.metric_kind != MetricKind::null_kind) dir = normalized(dir, tol);
  const Multivector e0 = Multivector::blade(dir.signature(), 1u);
  return exp_bivector(wedge(e0, dir) * (-0.5 * lambda), tol);
}

Spinor make_boost_m3(double alpha, double phi) {
  const Signature& sig = Signature::m3();
  const Multivector omega =
      Multivector::blade(sig, {2, 3}, -std::sin(alpha)) +
      Multivector::blade(sig, {3, 1}, std::cos(alpha));
  return exp_bivector(omega * (-0.5 * phi));
}

Spinor make_boost_m3(const Entity& axis, double phi, const Tolerance& tol) {
  if (axis.space() != Space::M3 || axis.role() != Role::line)
    raise(ErrorCode::usage, "boost axes in M3 are lines");
  const Multivector omega = normalized(axis.mv(), tol);
  const Multivector e3 = Multivector::blade(omega.signature(), 1u << 3);
  const Multivector plane = wedge(e3, omega);
  if (std::abs(metric_square(plane)) >
      std::max(tol.abs, tol.rel * omega.coeff_norm() * omega.coeff_norm()))
    raise(ErrorCode::usage,
          "boost axis must be parallel to the xy-plane ((e3^axis)^2 = 0)");
  return exp_bivector(omega * (-0.5 * phi), tol);
}

Spinor make_euclidean_m3(const Entity& axis, double alpha,
                         const Tolerance& tol) {
  if (axis.space() != Space::M3 || axis.role() != Role::line)
    raise(ErrorCode::usage, "rotation axes in M3 are lines");
  const Multivector omega = normalized(axis.mv(), tol);
  const Multivector e3 = Multivector::blade(omega.signature(), 1u << 3);
  if (!approx_zero(inner(e3, omega), omega.coeff_norm(), tol))
    raise(ErrorCode::usage,
          "euclidean rotation axis must satisfy e3 . axis = 0");
  return exp_bivector(omega * (-0.5 * alpha), tol);
}

Spinor make_boost_m4(double alpha, double beta, double phi) {
  const Signature& sig = Signature::m4();
  const Multivector sigma =
      Multivector::blade(sig, {4, 1}, std::cos(alpha) * std::sin(beta)) +
      Multivector::blade(sig, {4, 2}, std::sin(alpha) * std::sin(beta)) +
      Multivector::blade(sig, {4, 3}, std::cos(beta));
  return exp_bivector(sigma * (-0.5 * phi));
}

Spinor make_euclidean_m4(double alpha_e, double beta_e, double alpha) {
  const Signature& sig = Signature::m4();
  const Multivector sigma =
      Multivector::blade(sig, {2, 3}, std::cos(alpha_e) * std::sin(beta_e)) +
      Multivector::blade(sig, {3, 1}, std::sin(alpha_e) * std::sin(beta_e)) +
      Multivector::blade(sig, {1, 2}, std::cos(beta_e));
  return exp_bivector(sigma * (-0.5 * alpha));
}

}  // namespace mpga
