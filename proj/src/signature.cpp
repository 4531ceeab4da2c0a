#include "mpga/signature.hpp"

namespace mpga {

const Signature& Signature::m2() {
  static const Signature sig(3, {0, 1, -1, 0, 0}, Space::M2);
  return sig;
}

const Signature& Signature::m3() {
  static const Signature sig(4, {0, 1, 1, -1, 0}, Space::M3);
  return sig;
}

const Signature& Signature::m4() {
  static const Signature sig(5, {0, 1, 1, 1, -1}, Space::M4);
  return sig;
}

const Signature& Signature::euclidean_oracle(int dim_total) {
  static const Signature e2(3, {0, 1, 1, 0, 0}, Space::EuclideanOracle);
  static const Signature e3(4, {0, 1, 1, 1, 0}, Space::EuclideanOracle);
  static const Signature e4(5, {0, 1, 1, 1, 1}, Space::EuclideanOracle);
  switch (dim_total) {
    case 3:
      return e2;
    case 4:
      return e3;
    case 5:
      return e4;
    default:
      raise(ErrorCode::usage, "euclidean oracle supports dim_total 3, 4, 5");
  }
}

const Signature& Signature::for_space(Space space) {
  switch (space) {
    case Space::M2:
      return m2();
    case Space::M3:
      return m3();
    case Space::M4:
      return m4();
    default:
      raise(ErrorCode::usage, "no unique signature for the euclidean oracle");
  }
}

std::string Signature::name() const {
  switch (tag_) {
    case Space::M2:
      return "M2";
    case Space::M3:
      return "M3";
    case Space::M4:
      return "M4";
    case Space::EuclideanOracle:
      return "E" + std::to_string(dim_ - 1) + "-oracle";
  }
  return "?";
}

}  // namespace mpga
