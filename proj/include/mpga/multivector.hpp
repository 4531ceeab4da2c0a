#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <optional>

#include "mpga/signature.hpp"

namespace mpga {

/// Default comparison tolerances: relative with an absolute floor.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

/// Dense multivector over the canonical basis blades of a signature.
/// Coefficients live in a stack-allocated Eigen vector of length
/// 2^dim_total. Values are immutable after construction; every operation
/// below is a pure function.
class Multivector {
 public:
  using Coeffs = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 32, 1>;

  explicit Multivector(const Signature& sig)
      : sig_(&sig), c_(Coeffs::Zero(sig.mv_size())) {}

  Multivector(const Signature& sig, Coeffs coeffs);

  static Multivector scalar(const Signature& sig, double value);
  static Multivector blade(const Signature& sig, BladeMask mask,
                           double coeff = 1.0);
  /// Blade from basis indices in arbitrary order, e.g. {2, 0} for the
  /// paper's e20; the permutation sign is folded into the coefficient.
  /// Repeated indices are rejected.
  static Multivector blade(const Signature& sig, std::initializer_list<int> idx,
                           double coeff = 1.0);

  const Signature& signature() const { return *sig_; }
  const Coeffs& coeffs() const { return c_; }
  double coeff(BladeMask mask) const { return c_[mask]; }
  int size() const { return static_cast<int>(c_.size()); }

  /// Euclidean norm of the coefficient vector (not the metric norm).
  double coeff_norm() const { return c_.norm(); }
  bool is_zero() const { return c_.isZero(0.0); }

  Multivector operator-() const { return Multivector(*sig_, -c_); }
  Multivector operator+(const Multivector& other) const;
  Multivector operator-(const Multivector& other) const;
  Multivector operator*(double s) const { return Multivector(*sig_, c_ * s); }
  Multivector operator/(double s) const { return Multivector(*sig_, c_ / s); }
  friend Multivector operator*(double s, const Multivector& a) { return a * s; }
  Multivector operator*(const Multivector& other) const;
  Multivector operator^(const Multivector& other) const;

 private:
  const Signature* sig_;
  Coeffs c_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector wedge(const Multivector& a, const Multivector& b);
/// Symmetric inner product restricted to homogeneous arguments: the
/// grade-|r-s| part of the geometric product. Non-homogeneous input is a
/// usage error; callers decompose by grade first.
Multivector inner(const Multivector& a, const Multivector& b);
Multivector commutator(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);
Multivector grade_select(const Multivector& a, int grade);
/// Right multiplication by the pseudoscalar I.
Multivector polar(const Multivector& a);
Multivector pseudoscalar(const Signature& sig);

/// Basis complement: maps each blade b to the blade c with b ^ c = +I.
Multivector complement(const Multivector& a);
Multivector complement_inverse(const Multivector& a);
/// Metric-free regressive join via the basis complement.
Multivector regressive_join(const Multivector& a, const Multivector& b);

/// |<A reverse(A)>_0|^(1/2); for points this reduces to the weight |w|.
double norm(const Multivector& a);
/// Scalar part of the full square A A; drives the proper/improper/null
/// classification of vectors and simple blades.
double metric_square(const Multivector& a);
Multivector normalized(const Multivector& a, const Tolerance& tol = {});

double scalar_part(const Multivector& a);
/// Grade if all coefficients outside a single grade are negligible
/// (relative to the coefficient norm); nullopt for mixed-grade values.
/// The zero multivector reports grade 0.
std::optional<int> homogeneous_grade(const Multivector& a,
                                     const Tolerance& tol = {});
/// Exact-support variant used where values are built from exact inputs.
std::optional<int> support_grade(const Multivector& a);

bool approx_equal(const Multivector& a, const Multivector& b,
                  const Tolerance& tol = {});
bool approx_zero(const Multivector& a, double scale, const Tolerance& tol = {});

inline void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    raise(ErrorCode::signature_mismatch,
          "operands come from different signatures (" + a.signature().name() +
              " vs " + b.signature().name() + ")");
}

}  // namespace mpga
