#pragma once

#include <string>
#include <vector>

#include "mpga/multivector.hpp"

namespace mpga {

/// One displayed basis blade: the name (e.g. "e320"), the canonical mask
/// it maps to, and the sign relating the named blade to the canonical one.
struct DisplayBlade {
  std::string name;
  BladeMask mask;
  int sign;
};

/// Display basis of a signature, ordered the way the standard forms are
/// written (points as w, x, y, t and so on).
const std::vector<DisplayBlade>& display_basis(const Signature& sig);

/// Renders a multivector in display notation, e.g. "1 - 0.5*e20".
/// Coefficients print with 12 significant digits; the zero multivector
/// renders as "0".
std::string to_string(const Multivector& mv);

/// Formats a double with 12 significant digits.
std::string format_coeff(double value);

}  // namespace mpga
