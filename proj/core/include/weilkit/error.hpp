#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weilkit {

enum class ErrorCode {
  InvalidArgument,
  LeadingCoeffVanishes,
  DegreeTooLarge,
  InsufficientPoints,
  NotMonic,
  OddDegree,
  NotWeil,
  InternalInconsistency,
  Reducible,
  PrecisionExhausted,
  NotIsogenyClass,
  RankTooLarge,
  TooLarge,
  NotPrime,
  NoAdmissibleAssignment,
  UnsupportedN,
  UnstableKernel,
  Inconsistent,
  WrongDimension,
  NonTransitiveH,
  UnsupportedKernel,
  SearchExhausted,
  BadDiscriminant,
  NotMonogenicDeclared,
  ReduciblePoly,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `details` carries the individual
// failed checks when there is more than one (e.g. NotWeil).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace weilkit
