#include "pqc/error.hpp"

namespace pqc {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNotDensityOperator: return "NotDensityOperator";
    case ErrorCode::kBadNormalization: return "BadNormalization";
    case ErrorCode::kSectorOutOfRange: return "SectorOutOfRange";
    case ErrorCode::kBadSpin: return "BadSpin";
    case ErrorCode::kQuadratureTooCoarse: return "QuadratureTooCoarse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kWeightSumError: return "WeightSumError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> index) {
  std::string out(errorCodeName(code));
  if (index) out += " (element " + std::to_string(*index) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> element_index)
    : std::runtime_error(decorate(code, message, element_index)),
      code_(code),
      index_(element_index),
      message_(message) {}

}  // namespace pqc
