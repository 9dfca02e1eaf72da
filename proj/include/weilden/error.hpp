#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilden {

enum class ErrorCode {
  NotPrimePower,
  NotMonic,
  OddDegree,
  SymmetryViolation,
  RootsOffCircle,
  ZeroPolynomial,
  ConductorCrossCheckFailed,
  NotRelevant,
  UnsupportedNonSemisimple,
  EqualsP,
  NotOrdinary,
  UnexpectedPFactorization,
  DimensionMismatch,
  NoInvariantForm,
  TooLarge,
  GenerationStalled,
  FixtureMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (CLI, Python module) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail = {});

}  // namespace weilden
