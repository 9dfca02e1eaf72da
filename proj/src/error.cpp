#include "weilden/error.hpp"

namespace weilden {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::RootsOffCircle: return "RootsOffCircle";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConductorCrossCheckFailed: return "ConductorCrossCheckFailed";
    case ErrorCode::NotRelevant: return "NotRelevant";
    case ErrorCode::UnsupportedNonSemisimple: return "UnsupportedNonSemisimple";
    case ErrorCode::EqualsP: return "EqualsP";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::UnexpectedPFactorization: return "UnexpectedPFactorization";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoInvariantForm: return "NoInvariantForm";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::GenerationStalled: return "GenerationStalled";
    case ErrorCode::FixtureMismatch: return "FixtureMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(to_string(code))
                                        : std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace weilden
