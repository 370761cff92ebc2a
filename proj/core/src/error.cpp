#include "mrbound/error.hpp"

namespace mrbound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kNotMonic: return "NotMonic";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kPrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kEmptyRecurrence: return "EmptyRecurrence";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSubsetCapExceeded: return "SubsetCapExceeded";
    case ErrorCode::kDegenerateA: return "DegenerateA";
    case ErrorCode::kNotAlgebraicInteger: return "NotAlgebraicInteger";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mrbound
