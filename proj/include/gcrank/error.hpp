#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcrank {

enum class ErrorCode {
  kParse,
  kInvalidEpsilon,
  kAllZeroWeights,
  kNegativeWeight,
  kNegativeProfit,
  kZeroVector,
  kLengthMismatch,
  kResourceBudgetExceeded,
  kTooLarge,
  kNoExactFill,
  kOddTotalWeight,
  kGapNotFillable,
  kInvalidBases,
  kDimensionOverflow,
  kGridTooLarge,
  kGammaTooSmall,
  kUncertifiableGrid,
  kInvalidGrid,
  kEmptyPolytope,
  kUnboundedPolytope,
  kDegeneratePolytope,
  kBudgetExceeded,
  kInvalidArgument,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kAllZeroWeights: return "AllZeroWeights";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kNegativeProfit: return "NegativeProfit";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoExactFill: return "NoExactFill";
    case ErrorCode::kOddTotalWeight: return "OddTotalWeight";
    case ErrorCode::kGapNotFillable: return "GapNotFillable";
    case ErrorCode::kInvalidBases: return "InvalidBases";
    case ErrorCode::kDimensionOverflow: return "DimensionOverflow";
    case ErrorCode::kGridTooLarge: return "GridTooLarge";
    case ErrorCode::kGammaTooSmall: return "GammaTooSmall";
    case ErrorCode::kUncertifiableGrid: return "UncertifiableGrid";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kEmptyPolytope: return "EmptyPolytope";
    case ErrorCode::kUnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::kDegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcrank
