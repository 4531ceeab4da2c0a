#include "mpga/render.hpp"

#include <cmath>
#include <cstdio>

namespace mpga {

namespace {

std::vector<DisplayBlade> build_basis(const std::vector<std::string>& names) {
  std::vector<DisplayBlade> out;
  out.push_back({"", 0, 1});
  for (const std::string& name : names) {
    BladeMask mask = 0;
    int sign = 1;
    for (char ch : name) {
      const int i = ch - '0';
      const BladeMask bit = static_cast<BladeMask>(1u << i);
      sign *= reorder_sign(static_cast<BladeMask>(mask & ~(bit - 1)), bit);
      mask |= bit;
    }
    out.push_back({"e" + name, mask, sign});
  }
  return out;
}

// Grade by grade in the order the standard coordinate forms use.
const std::vector<std::string> kM2Names = {
    "0", "1", "2", "12", "20", "01", "012"};
const std::vector<std::string> kM3Names = {
    "0",  "1",  "2",   "3",   "10",  "20",  "30",  "23",
    "31", "12", "123", "320", "130", "210", "0123"};
const std::vector<std::string> kM4Names = {
    "0",    "1",    "2",    "3",    "4",    "10",   "20",   "30",
    "40",   "41",   "42",   "43",   "23",   "31",   "12",   "210",
    "310",  "410",  "320",  "420",  "430",  "234",  "314",  "124",
    "321",  "1234", "2340", "3140", "1240", "3210", "01234"};

}  // namespace

const std::vector<DisplayBlade>& display_basis(const Signature& sig) {
  // Masks and signs are metric-free, so the same tables serve the oracle
  // signatures of equal dimension.
  static const std::vector<DisplayBlade> m2 = build_basis(kM2Names);
  static const std::vector<DisplayBlade> m3 = build_basis(kM3Names);
  static const std::vector<DisplayBlade> m4 = build_basis(kM4Names);
  switch (sig.dim_total()) {
    case 3:
      return m2;
    case 4:
      return m3;
    default:
      return m4;
  }
}

std::string format_coeff(double value) {
  if (value == 0.0) value = 0.0;  // print negative zero as 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string to_string(const Multivector& mv) {
  const auto& basis = display_basis(mv.signature());
  std::string out;
  for (const DisplayBlade& b : basis) {
    const double c = mv.coeff(b.mask) * b.sign;
    if (c == 0.0) continue;
    const bool first = out.empty();
    const double mag = std::abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (b.name.empty())
      out += format_coeff(mag);
    else if (mag == 1.0)
      out += b.name;
    else
      out += format_coeff(mag) + "*" + b.name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace mpga
