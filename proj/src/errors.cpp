#include "gaborsech/errors.hpp"

namespace gaborsech {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NomeOutOfRange: return "NomeOutOfRange";
    case ErrorCode::ArgumentOutOfStrip: return "ArgumentOutOfStrip";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::NonpositiveDilation: return "NonpositiveDilation";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooCloseToHalfInteger: return "TooCloseToHalfInteger";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::ZeroDivision: return "ZeroDivision";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gaborsech
