#pragma once

#include <stdexcept>
#include <string>

namespace tropmat {

enum class ErrorCode {
  ComparabilityViolation,
  EliminationViolation,
  GroundSetTooLarge,
  IntersectionNotSingleton,
  NotThreeEdgeConnected,
  NotSubfamily,
  NotExcluded,
  DimensionMismatch,
  NotSquare,
  SizeBudgetExceeded,
  SearchBudgetExceeded,
  DivisionByZeroSeries,
  PrecisionExhausted,
  TooManyMinors,
  NotInSpace,
  PluckerCoordinateZero,
  InvalidArgument,
  ParseError,
};

const char* error_code_name(ErrorCode c);

/// Domain error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tropmat
