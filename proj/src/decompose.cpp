#include "mpga/decompose.hpp"

#include <Eigen/QR>
#include <cmath>

namespace mpga {

namespace {

void require_grade(const Multivector& a, int grade, const char* op) {
  auto g = homogeneous_grade(a);
  if (!g || (*g != grade && !a.is_zero()))
    raise(ErrorCode::not_a_bivector,
          std::string(op) + " expects a homogeneous grade-" +
              std::to_string(grade) + " argument");
}

double null_band(const Multivector& a, const Tolerance& tol) {
  return std::max(tol.abs, tol.rel * a.coeff_norm() * a.coeff_norm());
}

/// Vector m with e0 ^ m equal to the e0-part of a bivector.
Multivector infinity_direction(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector m(sig);
  for (int i = 1; i < sig.dim_total(); ++i) {
    const BladeMask mask = static_cast<BladeMask>(1u | (1u << i));
    m = m + Multivector::blade(sig, static_cast<BladeMask>(1u << i),
                               a.coeff(mask));
  }
  return m;
}

/// Spatial bivector pi with e0 ^ pi equal to a pure-infinity trivector.
Multivector infinity_plane(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector pi(sig);
  for (int i = 1; i < sig.dim_total(); ++i)
    for (int j = i + 1; j < sig.dim_total(); ++j) {
      const BladeMask mask = static_cast<BladeMask>(1u | (1u << i) | (1u << j));
      const BladeMask ij = static_cast<BladeMask>((1u << i) | (1u << j));
      pi = pi + Multivector::blade(sig, ij, a.coeff(mask));
    }
  return pi;
}

/// Two-finite-axes split: roots of x^2 - (pi.pi) x + (pi^pi)^2/4 = 0 and
/// pi_i = pi / (1 + (pi^pi)/(2 x_i)).
BivectorDecomposition split_two_finite_axes(const Multivector& pi,
                                            const Multivector& w,
                                            double w_square) {
  const double s = metric_square(pi);
  const double disc = std::sqrt(s * s - w_square);
  const double r1 = 0.5 * (s + disc);
  const double r2 = 0.5 * (s - disc);
  auto axis = [&](double r) {
    const Multivector q = w / (2.0 * r);
    const double q2 = w_square / (4.0 * r * r);
    return geometric_product(pi, Multivector::scalar(pi.signature(), 1.0) - q) /
           (1.0 - q2);
  };
  return {axis(r1), axis(r2), DecompRegime::two_finite_axes};
}

/// Deterministic null/infinity split of pi = F + e0^m with F simple null:
/// eta1 = F + e0^p, eta2 = e0^(m - p) where p solves p^F = 0 and
/// <F p>_1 = <F m>_1 in the least-squares sense.
BivectorDecomposition split_null(const Multivector& pi, const Tolerance& tol) {
  const Signature& sig = pi.signature();
  const int spatial = sig.dim_total() - 1;
  const Multivector f = finite_part(pi);
  const Multivector m = infinity_direction(pi);

  // Rows: trivector coordinates of e_i ^ F, then vector coordinates of
  // F . e_i, both over the e0-free subalgebra.
  std::vector<BladeMask> tri_masks, vec_masks;
  for (int i = 1; i <= spatial; ++i)
    vec_masks.push_back(static_cast<BladeMask>(1u << i));
  for (int i = 1; i <= spatial; ++i)
    for (int j = i + 1; j <= spatial; ++j)
      for (int k = j + 1; k <= spatial; ++k)
        tri_masks.push_back(
            static_cast<BladeMask>((1u << i) | (1u << j) | (1u << k)));

  const int rows = static_cast<int>(tri_masks.size() + vec_masks.size());
  Eigen::MatrixXd mat(rows, spatial);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  for (int col = 0; col < spatial; ++col) {
    const Multivector ei = Multivector::blade(sig, 1u << (col + 1));
    const Multivector w = wedge(ei, f);
    const Multivector d = grade_select(geometric_product(f, ei), 1);
    int row = 0;
    for (BladeMask mask : tri_masks) mat(row++, col) = w.coeff(mask);
    for (BladeMask mask : vec_masks) mat(row++, col) = d.coeff(mask);
  }
  const Multivector fm = grade_select(geometric_product(f, m), 1);
  {
    int row = static_cast<int>(tri_masks.size());
    for (BladeMask mask : vec_masks) rhs(row++) = fm.coeff(mask);
  }

  Eigen::VectorXd p = mat.colPivHouseholderQr().solve(rhs);
  const Multivector e0 = Multivector::blade(sig, 1u);
  Multivector pvec(sig);
  for (int i = 0; i < spatial; ++i)
    pvec = pvec + Multivector::blade(sig, 1u << (i + 1), p(i));
  const Multivector eta1 = f + wedge(e0, pvec);
  const Multivector eta2 = wedge(e0, m - pvec);

  const double scale = pi.coeff_norm() * pi.coeff_norm();
  const bool ok = approx_zero(wedge(eta1, eta1), scale, tol) &&
                  approx_zero(wedge(eta2, eta2), scale, tol) &&
                  approx_zero(commutator(eta1, eta2), scale, tol) &&
                  approx_equal(eta1 + eta2, pi, tol);
  if (!ok) return {pi, Multivector(sig), DecompRegime::irreducible};
  return {eta1, eta2, DecompRegime::null_nonunique};
}

}  // namespace

BivectorDecomposition decompose_bivector_m3(const Multivector& bivector,
                                            const Tolerance& tol) {
  require_grade(bivector, 2, "decompose_bivector_m3");
  const Signature& sig = bivector.signature();
  const Multivector w = wedge(bivector, bivector);
  const double band = null_band(bivector, tol);
  if (w.coeff_norm() <= band)
    return {bivector, Multivector(sig), DecompRegime::simple};

  const double s = metric_square(bivector);
  if (std::abs(s) <= band)
    return {bivector, Multivector(sig), DecompRegime::irreducible};

  const double a = scalar_part(regressive_join(bivector, bivector)) / (2.0 * s);
  const Multivector part2 =
      geometric_product(pseudoscalar(sig) * a, bivector);
  return {bivector - part2, part2, DecompRegime::finite_plus_infinity};
}

BivectorDecomposition decompose_bivector_m4(const Multivector& bivector,
                                            const Tolerance& tol) {
  require_grade(bivector, 2, "decompose_bivector_m4");
  const Signature& sig = bivector.signature();
  const Multivector w = wedge(bivector, bivector);
  const double band = null_band(bivector, tol);
  if (w.coeff_norm() <= band)
    return {bivector, Multivector(sig), DecompRegime::simple};

  const double w_square = scalar_part(geometric_product(w, w));
  const double s = metric_square(bivector);
  if (std::abs(w_square) >
      std::max(tol.abs, tol.rel * w.coeff_norm() * w.coeff_norm()))
    return split_two_finite_axes(bivector, w, w_square);

  if (std::abs(s) > band) {
    const Multivector part2 =
        geometric_product(w / (2.0 * s), bivector);
    return {bivector - part2, part2, DecompRegime::finite_plus_infinity};
  }

  const Multivector cube =
      geometric_product(geometric_product(bivector, bivector), bivector);
  if (!approx_zero(cube, std::pow(bivector.coeff_norm(), 3), tol))
    return {bivector, Multivector(sig), DecompRegime::irreducible};
  return split_null(bivector, tol);
}

BivectorDecomposition decompose_trivector_m4(const Multivector& trivector,
                                             const Tolerance& tol) {
  require_grade(trivector, 3, "decompose_trivector_m4");
  const Signature& sig = trivector.signature();
  const Multivector self_join = regressive_join(trivector, trivector);
  const double band = null_band(trivector, tol);
  if (self_join.coeff_norm() <= band)
    return {trivector, Multivector(sig), DecompRegime::simple};

  const double s = metric_square(trivector);
  if (std::abs(s) > band) {
    const Multivector factor = polar(self_join) / (2.0 * s);
    const Multivector part2 =
        grade_select(geometric_product(factor, trivector), 3);
    return {trivector - part2, part2, DecompRegime::finite_plus_infinity};
  }

  if (approx_zero(finite_part(trivector), trivector.coeff_norm(), tol)) {
    // Phi = e0 ^ pi with pi spatial and non-simple: split pi along its
    // two finite axes and wedge e0 back on.
    const Multivector pi = infinity_plane(trivector);
    const Multivector w = wedge(pi, pi);
    BivectorDecomposition spatial =
        split_two_finite_axes(pi, w, scalar_part(geometric_product(w, w)));
    const Multivector e0 = Multivector::blade(sig, 1u);
    return {wedge(e0, spatial.part1), wedge(e0, spatial.part2),
            DecompRegime::null_nonunique};
  }

  return {trivector, Multivector(sig), DecompRegime::irreducible};
}

Entity irreducible_null_action(const Multivector& eta, double theta,
                               const Entity& p, const Tolerance& tol) {
  require_grade(eta, 2, "irreducible_null_action");
  const double scale = eta.coeff_norm() * eta.coeff_norm();
  if (std::abs(metric_square(eta)) > std::max(tol.abs, tol.rel * scale) ||
      approx_zero(wedge(eta, eta), scale, tol))
    raise(ErrorCode::usage,
          "irreducible_null_action expects eta.eta = 0 and eta^eta != 0");
  const Multivector cube =
      geometric_product(geometric_product(eta, eta), eta);
  if (approx_zero(cube, std::pow(eta.coeff_norm(), 3), tol))
    raise(ErrorCode::usage, "irreducible_null_action expects eta^3 != 0");

  const Multivector& pm = p.mv();
  const Multivector result =
      pm + commutator(pm, eta) * theta -
      geometric_product(geometric_product(eta, pm), eta) *
          (0.25 * theta * theta) -
      commutator(pm, cube) * (theta * theta * theta / 12.0);
  return Entity(grade_select(result, role_grade(p.space(), p.role())),
                p.role(), tol);
}

}  // namespace mpga
