#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qf {

enum class Errc {
  EmptyFacet,
  EmptyInput,
  InvalidLabel,
  DimensionOutOfRange,
  TooLarge,
  IsolatedVertexDeclared,
  EmptyIdeal,
  VoidComplex,
  AmbientTooSmall,
  MixedDegrees,
  OutOfValidatedRange,
  IsolatedVertex,
  PreconditionViolated,
  ParameterOutOfRange,
  ParityMismatch,
  BoundViolation,
  JoinExceedsParts,
  UnknownSuite,
  CapExceeded,
  ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyFacet: return "EmptyFacet";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IsolatedVertexDeclared: return "IsolatedVertexDeclared";
    case Errc::EmptyIdeal: return "EmptyIdeal";
    case Errc::VoidComplex: return "VoidComplex";
    case Errc::AmbientTooSmall: return "AmbientTooSmall";
    case Errc::MixedDegrees: return "MixedDegrees";
    case Errc::OutOfValidatedRange: return "OutOfValidatedRange";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::JoinExceedsParts: return "JoinExceedsParts";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the
/// code is stable and is what callers (and the CLI) switch on.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace qf
