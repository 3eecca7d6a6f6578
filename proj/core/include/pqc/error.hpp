#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pqc {

enum class ErrorCode {
  kNotHermitian,
  kNotUnitary,
  kNotDensityOperator,
  kBadNormalization,
  kSectorOutOfRange,
  kBadSpin,
  kQuadratureTooCoarse,
  kDimensionMismatch,
  kNonFinite,
  kParseError,
  kWeightSumError,
  kInvalidArgument,
};

std::string_view errorCodeName(ErrorCode code);

/// All library failures are reported through this exception. `elementIndex`
/// is set when the failure can be attributed to one element of a sequence
/// (an ensemble member, for instance).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> element_index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> elementIndex() const noexcept { return index_; }
  /// Message without the code/index prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::string message_;
};

}  // namespace pqc
