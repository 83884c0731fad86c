#include "ecga/error.hpp"

namespace ecga {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InverseOfZero: return "InverseOfZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OffCurvePoint: return "OffCurvePoint";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::EmptyBitString: return "EmptyBitString";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SequenceTooShort: return "SequenceTooShort";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::DegenerateSeries: return "DegenerateSeries";
    case ErrorCode::ConstantSequence: return "ConstantSequence";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::UnsupportedDepth: return "UnsupportedDepth";
    case ErrorCode::CorruptImage: return "CorruptImage";
    case ErrorCode::UnknownCurve: return "UnknownCurve";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ecga
