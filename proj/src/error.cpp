#include "tropmat/error.hpp"

namespace tropmat {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ComparabilityViolation: return "ComparabilityViolation";
    case ErrorCode::EliminationViolation: return "EliminationViolation";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::IntersectionNotSingleton: return "IntersectionNotSingleton";
    case ErrorCode::NotThreeEdgeConnected: return "NotThreeEdgeConnected";
    case ErrorCode::NotSubfamily: return "NotSubfamily";
    case ErrorCode::NotExcluded: return "NotExcluded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::TooManyMinors: return "TooManyMinors";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::PluckerCoordinateZero: return "PluckerCoordinateZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace tropmat
