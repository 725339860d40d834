#pragma once

#include <stdexcept>
#include <string>

namespace niho {

enum class ErrorCode {
  NonPrime,
  EvenCharacteristic,
  SmallCharacteristic,
  DegenerateLeadingCoefficient,
  BadCharacteristic,
  AmbiguousRepresentation,
  TooLarge,
  ZeroInput,
  PatternTooLarge,
  UnknownPattern,
  UnsupportedD,
  IntegralityFailure,
  MismatchError,
  NegativeFrequency,
  GcdViolation,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
    case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::AmbiguousRepresentation: return "AmbiguousRepresentation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::UnknownPattern: return "UnknownPattern";
    case ErrorCode::UnsupportedD: return "UnsupportedD";
    case ErrorCode::IntegralityFailure: return "IntegralityFailure";
    case ErrorCode::MismatchError: return "MismatchError";
    case ErrorCode::NegativeFrequency: return "NegativeFrequency";
    case ErrorCode::GcdViolation: return "GcdViolation";
  }
  return "Unknown";
}

}  // namespace niho
