#include "fplab/error.hpp"

namespace fplab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::MixedContexts: return "MixedContexts";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BaseNotInSet: return "BaseNotInSet";
    case ErrorCode::ZeroDilate: return "ZeroDilate";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fplab
