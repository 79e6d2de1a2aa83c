#include "dfilab/error.hpp"

namespace dfilab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::MinorTooLarge: return "MinorTooLarge";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::LozengeViolated: return "LozengeViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::DifferentialBroken: return "DifferentialBroken";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

bool Error::is_resource_limit() const noexcept {
  switch (code_) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ComplexTooLarge:
    case ErrorCode::LatticeTooLarge:
    case ErrorCode::OracleTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace dfilab
