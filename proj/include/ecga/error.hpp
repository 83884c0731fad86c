#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecga {

enum class ErrorCode {
  InverseOfZero,
  NotInvertible,
  OffCurvePoint,
  SingularCurve,
  ModulusMismatch,
  OrderExhausted,
  EmptyImage,
  EmptyBitString,
  LengthMismatch,
  SequenceTooShort,
  IndexOutOfRange,
  InvalidPlan,
  InvalidConfig,
  DegenerateSeries,
  ConstantSequence,
  UnsupportedFormat,
  UnsupportedDepth,
  CorruptImage,
  UnknownCurve,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the
// code is stable and is what callers (and the CLI exit-code mapping) test.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecga
