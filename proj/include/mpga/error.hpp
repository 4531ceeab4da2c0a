#pragma once

#include <stdexcept>
#include <string>

namespace mpga {

/// Error codes for conditions that indicate misuse of the API or an
/// unrepresentable request (as opposed to measures that are merely
/// undefined, which are reported through Measure).
enum class ErrorCode {
  signature_mismatch,
  non_homogeneous,
  not_a_bivector,
  not_invertible,
  null_normalize,
  invalid_entity,
  undefined_orientation,
  parametrization_error,
  superluminal,
  convergence_failure,
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mpga
