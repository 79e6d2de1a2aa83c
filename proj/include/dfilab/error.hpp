#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfilab {

enum class ErrorCode {
  InvalidInput,
  NotPure,
  MinorTooLarge,
  RankTooLarge,
  WrongShape,
  LozengeViolated,
  BudgetExceeded,
  NotBounded,
  ComplexTooLarge,
  LatticeTooLarge,
  OracleTooLarge,
  ShapeMismatch,
  HypothesisFailed,
  DifferentialBroken,
};

std::string_view to_string(ErrorCode code);

/// Structured failure carrying one of the named error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

  /// True for cap/budget failures (CLI exit code 3).
  bool is_resource_limit() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace dfilab
