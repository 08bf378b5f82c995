#include "skewnorm/error.hpp"

namespace skewnorm {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MalformedAutomorphism: return "MalformedAutomorphism";
    case ErrorCode::ZeroBound: return "ZeroBound";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAutomorphic: return "NotAutomorphic";
    case ErrorCode::NonCommutingPoint: return "NonCommutingPoint";
    case ErrorCode::AutomorphismMismatch: return "AutomorphismMismatch";
    case ErrorCode::NotInF: return "NotInF";
    case ErrorCode::NonCentralRing: return "NonCentralRing";
    case ErrorCode::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::ExponentEqualityFails: return "ExponentEqualityFails";
    case ErrorCode::UnsupportedAutoShape: return "UnsupportedAutoShape";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::WitnessHypothesisFails: return "WitnessHypothesisFails";
    case ErrorCode::CommutationRequired: return "CommutationRequired";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnknownDemo: return "UnknownDemo";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace skewnorm
