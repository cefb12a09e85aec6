#pragma once

#include <stdexcept>
#include <string>

namespace subdirac {

// Failure codes mirror the error vocabulary of the public API. Library code
// throws Error; the CLI maps codes to exit codes (2 = invalid input/model,
// 3 = numerical procedure could not certify its result).
enum class Errc {
  NotNilpotent,
  NotIntegralSL,
  NotBracketGenerating,
  BadFrame,
  SingularMatrix,
  DimensionTooLarge,
  ScanInconclusive,
  NoComplement,
  NotTwoStep,
  FixedPointInput,
  UnsupportedDimension,
  NotFixedPoint,
  NotConverged,
  ScalingValidationFailed,
  Xi1Zero,
  DomainTooSmall,
  NotHermitian,
  NoConvergence,
  UnsupportedModel,
  InvalidArgument,
  Overflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotIntegralSL: return "NotIntegralSL";
    case Errc::NotBracketGenerating: return "NotBracketGenerating";
    case Errc::BadFrame: return "BadFrame";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::ScanInconclusive: return "ScanInconclusive";
    case Errc::NoComplement: return "NoComplement";
    case Errc::NotTwoStep: return "NotTwoStep";
    case Errc::FixedPointInput: return "FixedPointInput";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::NotFixedPoint: return "NotFixedPoint";
    case Errc::NotConverged: return "NotConverged";
    case Errc::ScalingValidationFailed: return "ScalingValidationFailed";
    case Errc::Xi1Zero: return "Xi1Zero";
    case Errc::DomainTooSmall: return "DomainTooSmall";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::UnsupportedModel: return "UnsupportedModel";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace subdirac
