#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mk {

enum class ErrorCode {
  ZeroOverZero,
  InfiniteTimesZero,
  NegativeValue,
  DimensionMismatch,
  InfiniteWeight,
  NoMarkovIntoEmpty,
  NotMarkov,
  SpaceMismatch,
  NotAProductCodomain,
  EmptyCodomainZ,
  NotAProbabilityMeasure,
  HorizonOutOfRange,
  MissingInitialMeasure,
  NonzeroMean,
  GridViolation,
  ScopeMismatch,
  NotCertified,
  AlphaOutOfRange,
  InvalidArgument,
  IdentityViolation,
  // text format and expression language
  SyntaxError,
  DuplicateName,
  UnknownAtom,
  WeightCountMismatch,
  TypeError,
  UnknownName,
  ArityError,
};

std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mk
