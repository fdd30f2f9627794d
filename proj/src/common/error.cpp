#include "cogtrade/error.hpp"

namespace cogtrade {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::OhlcViolation: return "OhlcViolation";
    case ErrorCode::DuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorCode::GapDetected: return "GapDetected";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::PeriodExceedsSeries: return "PeriodExceedsSeries";
    case ErrorCode::InvalidPeriods: return "InvalidPeriods";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownIndicator: return "UnknownIndicator";
    case ErrorCode::MisalignedSeries: return "MisalignedSeries";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::CyclicGenome: return "CyclicGenome";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnevaluatedParent: return "UnevaluatedParent";
    case ErrorCode::MalformedGenome: return "MalformedGenome";
    case ErrorCode::EmptySearchSpace: return "EmptySearchSpace";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::MissingReport: return "MissingReport";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::MissingReport:
    case ErrorCode::EmptyResult:
    case ErrorCode::EmptyWindow:
    case ErrorCode::PeriodExceedsSeries:
      return false;
    default:
      return true;
  }
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " at line " + std::to_string(*line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)), code_(code), line_(line) {}

}  // namespace cogtrade
