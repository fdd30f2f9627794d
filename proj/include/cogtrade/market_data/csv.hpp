#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::market_data {

inline constexpr std::string_view kCsvHeader = "timestamp,open,high,low,close,volume";

struct ParseOptions {
  bool allow_gaps = false;
};

/// Reads `timestamp,open,high,low,close,volume` rows (ms timestamps, '.' decimals).
/// Rows may appear in any order; the result is sorted by timestamp.
/// Errors carry the 1-based file line of the offending row.
CandleSeries parse_csv(const std::filesystem::path& path, const std::string& symbol,
                       std::int64_t interval_seconds, ParseOptions options = {});
CandleSeries parse_csv(std::istream& in, const std::string& symbol, std::int64_t interval_seconds,
                       ParseOptions options = {});

/// Writes the series using shortest round-trip decimal formatting, so
/// parse_csv(write_csv(s)) reproduces s exactly.
void write_csv(const CandleSeries& series, std::ostream& out);
void write_csv(const CandleSeries& series, const std::filesystem::path& path);

}  // namespace cogtrade::market_data
