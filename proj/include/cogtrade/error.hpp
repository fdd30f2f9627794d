#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cogtrade {

enum class ErrorCode {
  // market data
  MalformedRow,
  OhlcViolation,
  DuplicateTimestamp,
  GapDetected,
  EmptyWindow,
  EmptyResult,
  // indicators
  PeriodExceedsSeries,
  InvalidPeriods,
  InvalidParameter,
  UnknownIndicator,
  // strategy
  MisalignedSeries,
  InvalidConfig,
  // neat / evolution
  CyclicGenome,
  ArityMismatch,
  UnevaluatedParent,
  MalformedGenome,
  EmptySearchSpace,
  // broker / core
  UnknownSymbol,
  MissingReport,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Validation errors map to CLI exit code 1, everything else to 2.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// 1-based source line for file-format errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace cogtrade
