#pragma once

#include <stdexcept>
#include <string>

namespace poco {

// Failure categories; the CLI maps these onto process exit codes.
enum class Errc {
  NonPrimeCharacteristic,
  DegreeOutOfRange,
  MixedFields,
  ZeroInverse,
  OutOfRange,
  CapExceeded,
  MixedBackends,
  ElementNotInGroup,
  PrimeDoesNotDivide,
  NotNormal,
  NotNormalized,
  NontrivialIntersection,
  BadFamilyParameter,
  InvalidParameters,
  InvariantViolated,
  NotSolvable,
  NotNonsolvable,
  IdentificationAmbiguous,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::MixedFields: return "MixedFields";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::MixedBackends: return "MixedBackends";
    case Errc::ElementNotInGroup: return "ElementNotInGroup";
    case Errc::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NontrivialIntersection: return "NontrivialIntersection";
    case Errc::BadFamilyParameter: return "BadFamilyParameter";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::NotNonsolvable: return "NotNonsolvable";
    case Errc::IdentificationAmbiguous: return "IdentificationAmbiguous";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace poco
