#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewnorm {

/// Machine-readable failure categories. The CLI reports `code_name(code)`
/// verbatim in its diagnostics.
enum class ErrorCode {
  TagMismatch,
  DivisionByZero,
  MalformedAutomorphism,
  ZeroBound,
  RingMismatch,
  ZeroPolynomial,
  NotAutomorphic,
  NonCommutingPoint,
  AutomorphismMismatch,
  NotInF,
  NonCentralRing,
  DegreeBoundViolated,
  GridTooSmall,
  NotHomogeneous,
  OracleInconsistent,
  ModeMismatch,
  ExponentEqualityFails,
  UnsupportedAutoShape,
  ZeroElement,
  WitnessHypothesisFails,
  CommutationRequired,
  UnknownVerb,
  SchemaViolation,
  UnknownDemo,
  InternalCheckFailed,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skewnorm
