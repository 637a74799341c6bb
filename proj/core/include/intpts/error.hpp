#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intpts {

enum class ErrorCode {
  InvalidPoint,
  InvalidForm,
  DimensionMismatch,
  ParseError,
  OnSubscheme,
  MissingArchLevel,
  IntersectsD,
  IntersectsN,
  BaseNotIntegral,
  Exhausted,
  NoPunctures,
  TooManyPunctures,
  IrrationalPunctures,
  UnitsFinite,
  TorsionGenerator,
  TorsionSpecialization,
  BadModulus,
  SingularCurve,
  SingularFiber,
  SectionPole,
  DegenerateSection,
  SingularAtP,
  NotOnVariety,
  CodimTooSmall,
  DegreeTooLarge,
  MeetsIdentitySection,
  FactorizationFailed,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, sweeps collecting per-curve diagnostics) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace intpts
