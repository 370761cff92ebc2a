#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrbound {

enum class ErrorCode {
  kNotIrreducible,
  kNotMonic,
  kDivisionByZero,
  kFieldMismatch,
  kPrecisionCapExceeded,
  kZeroElement,
  kZeroPolynomial,
  kArityMismatch,
  kEmptyRecurrence,
  kIndexOutOfRange,
  kSubsetCapExceeded,
  kDegenerateA,
  kNotAlgebraicInteger,
  kParseError,
  kUnsupported,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mrbound
