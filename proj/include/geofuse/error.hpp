#pragma once

#include <stdexcept>
#include <string>

namespace geofuse {

enum class ErrorCode {
  NonSquare,
  NegativeEntry,
  NonzeroDiagonal,
  AsymmetryTooLarge,
  IndexOutOfRange,
  WindowOutOfRange,
  DimensionMismatch,
  EmptyInput,
  SizeMismatch,
  TooFewViews,
  ZeroRowSum,
  EmptyNeighborhood,
  ConvergenceFailure,
  ZeroMatrix,
  ConstantInput,
  ThresholdRequired,
  BudgetExceeded,
  MissingColumn,
  TooFewRows,
  UnparseableNumber,
  NonUnitProjection,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace geofuse
