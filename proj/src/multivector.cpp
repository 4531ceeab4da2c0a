#include "mpga/multivector.hpp"

#include <algorithm>
#include <cmath>

namespace mpga {

Multivector::Multivector(const Signature& sig, Coeffs coeffs)
    : sig_(&sig), c_(std::move(coeffs)) {
  if (c_.size() != sig.mv_size())
    raise(ErrorCode::usage, "coefficient vector length does not match signature");
  if (!c_.allFinite())
    raise(ErrorCode::usage, "multivector coefficients must be finite");
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  return blade(sig, BladeMask{0}, value);
}

Multivector Multivector::blade(const Signature& sig, BladeMask mask,
                               double coeff) {
  if (mask >= sig.mv_size())
    raise(ErrorCode::usage, "blade index out of range for signature");
  Coeffs c = Coeffs::Zero(sig.mv_size());
  c[mask] = coeff;
  return Multivector(sig, std::move(c));
}

Multivector Multivector::blade(const Signature& sig,
                               std::initializer_list<int> idx, double coeff) {
  BladeMask mask = 0;
  int sign = 1;
  for (int i : idx) {
    if (i < 0 || i >= sig.dim_total())
      raise(ErrorCode::usage, "basis index out of range for signature");
    BladeMask bit = static_cast<BladeMask>(1u << i);
    if (mask & bit) raise(ErrorCode::usage, "repeated basis index in blade");
    // Appending e_i costs one transposition per already-present higher index.
    sign *= reorder_sign(static_cast<BladeMask>(mask & ~(bit - 1)), bit);
    mask |= bit;
  }
  return blade(sig, mask, sign * coeff);
}

Multivector Multivector::operator+(const Multivector& other) const {
  require_same_signature(*this, other);
  return Multivector(*sig_, c_ + other.c_);
}

Multivector Multivector::operator-(const Multivector& other) const {
  require_same_signature(*this, other);
  return Multivector(*sig_, c_ - other.c_);
}

Multivector Multivector::operator*(const Multivector& other) const {
  return geometric_product(*this, other);
}

Multivector Multivector::operator^(const Multivector& other) const {
  return wedge(*this, other);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  const int n = sig.mv_size();
  Multivector::Coeffs out = Multivector::Coeffs::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double ai = a.coeffs()[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      const double bj = b.coeffs()[j];
      if (bj == 0.0) continue;
      const int sign = blade_product_sign(sig, static_cast<BladeMask>(i),
                                          static_cast<BladeMask>(j));
      if (sign != 0) out[i ^ j] += sign * ai * bj;
    }
  }
  return Multivector(sig, std::move(out));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  const int n = sig.mv_size();
  Multivector::Coeffs out = Multivector::Coeffs::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double ai = a.coeffs()[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if ((i & j) != 0) continue;
      const double bj = b.coeffs()[j];
      if (bj == 0.0) continue;
      out[i | j] += reorder_sign(static_cast<BladeMask>(i),
                                 static_cast<BladeMask>(j)) *
                    ai * bj;
    }
  }
  return Multivector(sig, std::move(out));
}

Multivector inner(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  auto ra = homogeneous_grade(a);
  auto rb = homogeneous_grade(b);
  if (!ra || !rb)
    raise(ErrorCode::non_homogeneous,
          "inner product requires homogeneous operands");
  return grade_select(geometric_product(a, b), std::abs(*ra - *rb));
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return (geometric_product(a, b) - geometric_product(b, a)) * 0.5;
}

Multivector reverse(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector::Coeffs out = a.coeffs();
  for (int i = 0; i < sig.mv_size(); ++i)
    out[i] *= reverse_sign(grade_of(static_cast<BladeMask>(i)));
  return Multivector(sig, std::move(out));
}

Multivector grade_select(const Multivector& a, int grade) {
  const Signature& sig = a.signature();
  Multivector::Coeffs out = Multivector::Coeffs::Zero(sig.mv_size());
  for (int i = 0; i < sig.mv_size(); ++i)
    if (grade_of(static_cast<BladeMask>(i)) == grade) out[i] = a.coeffs()[i];
  return Multivector(sig, std::move(out));
}

Multivector pseudoscalar(const Signature& sig) {
  return Multivector::blade(sig, sig.full_mask());
}

Multivector polar(const Multivector& a) {
  return geometric_product(a, pseudoscalar(a.signature()));
}

Multivector complement(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector::Coeffs out = Multivector::Coeffs::Zero(sig.mv_size());
  const BladeMask full = sig.full_mask();
  for (int i = 0; i < sig.mv_size(); ++i) {
    const BladeMask m = static_cast<BladeMask>(i);
    out[full ^ m] = complement_sign(sig, m) * a.coeffs()[i];
  }
  return Multivector(sig, std::move(out));
}

Multivector complement_inverse(const Multivector& a) {
  const Signature& sig = a.signature();
  Multivector::Coeffs out = Multivector::Coeffs::Zero(sig.mv_size());
  const BladeMask full = sig.full_mask();
  for (int i = 0; i < sig.mv_size(); ++i) {
    const BladeMask m = static_cast<BladeMask>(i);
    out[i] = complement_sign(sig, m) * a.coeffs()[full ^ m];
  }
  return Multivector(sig, std::move(out));
}

Multivector regressive_join(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  return complement_inverse(wedge(complement(a), complement(b)));
}

double scalar_part(const Multivector& a) { return a.coeffs()[0]; }

double metric_square(const Multivector& a) {
  return scalar_part(geometric_product(a, a));
}

double norm(const Multivector& a) {
  return std::sqrt(std::abs(scalar_part(geometric_product(a, reverse(a)))));
}

Multivector normalized(const Multivector& a, const Tolerance& tol) {
  const double n = norm(a);
  if (n <= std::max(tol.abs, tol.rel * a.coeff_norm()))
    raise(ErrorCode::null_normalize, "cannot normalize a null or zero value");
  return a / n;
}

std::optional<int> homogeneous_grade(const Multivector& a,
                                     const Tolerance& tol) {
  const double scale = a.coeff_norm();
  const double cutoff = std::max(tol.abs, tol.rel * scale);
  int found = -1;
  for (int i = 0; i < a.size(); ++i) {
    if (std::abs(a.coeffs()[i]) <= cutoff) continue;
    const int g = grade_of(static_cast<BladeMask>(i));
    if (found < 0)
      found = g;
    else if (found != g)
      return std::nullopt;
  }
  return found < 0 ? 0 : found;
}

std::optional<int> support_grade(const Multivector& a) {
  int found = -1;
  for (int i = 0; i < a.size(); ++i) {
    if (a.coeffs()[i] == 0.0) continue;
    const int g = grade_of(static_cast<BladeMask>(i));
    if (found < 0)
      found = g;
    else if (found != g)
      return std::nullopt;
  }
  return found < 0 ? 0 : found;
}

bool approx_equal(const Multivector& a, const Multivector& b,
                  const Tolerance& tol) {
  require_same_signature(a, b);
  const double scale = std::max(a.coeff_norm(), b.coeff_norm());
  return (a.coeffs() - b.coeffs()).norm() <=
         std::max(tol.abs, tol.rel * scale);
}

bool approx_zero(const Multivector& a, double scale, const Tolerance& tol) {
  return a.coeff_norm() <= std::max(tol.abs, tol.rel * scale);
}

}  // namespace mpga
