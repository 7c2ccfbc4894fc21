#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace kummerwit {

enum class ErrorCode {
  CompositeP,
  ReducibleModulus,
  BothZero,
  NotCoprime,
  ZeroInput,
  BadEll,
  BadModulus,
  SearchExhausted,
  ZetaMissing,
  LthPowerInput,
  UntrackedLabel,
  PoleViolation,
  BadN,
  OffCurve,
  TorsionPoint,
  DistinctnessFailure,
  ZeroInA,
  UnitA,
  SizeMismatch,
  SearchTooLarge,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kummerwit
