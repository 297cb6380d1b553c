#pragma once

#include <stdexcept>
#include <string>

namespace reidemeister {

enum class ErrorCode {
  ParseError,
  NotPrime,
  NonPositiveExponent,
  InvalidType,
  DimensionMismatch,
  GroupMismatch,
  InvalidEndomorphism,
  NotCoprime,
  RankDeficient,
  NotCharacteristic,
  FullDepth,
  OutOfRange,
  NotAutomorphism,
  WrongPrime,
  OutOfSpectrum,
  BudgetExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reidemeister
