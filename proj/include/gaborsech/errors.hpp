#pragma once

#include <stdexcept>
#include <string>

namespace gaborsech {

enum class ErrorCode {
  InvalidArgument,
  NomeOutOfRange,
  ArgumentOutOfStrip,
  UnsupportedKind,
  NonpositiveDilation,
  TruncationTooSmall,
  NumericalFailure,
  NotReduced,
  DomainError,
  TooCloseToHalfInteger,
  QuadratureNotConverged,
  ZeroDivision,
};

/// Stable identifier used in machine-readable error output.
const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaborsech
