#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polygeo {

enum class ErrorCode {
  BadArgs,
  MalformedFile,
  InvariantViolation,
  MixedRadicand,
  DivisionByZero,
  PeriodNotFound,
  CornerHit,
  NoThresholdBelowN,
  PreconditionNotMet,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can report it in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polygeo
