#include "reidemeister/error.hpp"

namespace reidemeister {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::InvalidEndomorphism: return "InvalidEndomorphism";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::FullDepth: return "FullDepth";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::WrongPrime: return "WrongPrime";
    case ErrorCode::OutOfSpectrum: return "OutOfSpectrum";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace reidemeister
