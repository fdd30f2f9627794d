#include "cogtrade/market_data/csv.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "cogtrade/error.hpp"
#include "cogtrade/number_format.hpp"

namespace cogtrade::market_data {

namespace {

struct Row {
  Candle candle;
  std::size_t line = 0;
};

Candle parse_row(std::string_view text, std::size_t line) {
  std::array<std::string_view, 6> fields{};
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (count == fields.size()) {
      throw Error(ErrorCode::MalformedRow, "expected 6 columns", line);
    }
    fields[count++] = field;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != fields.size()) {
    throw Error(ErrorCode::MalformedRow,
                "expected 6 columns, found " + std::to_string(count), line);
  }
  Candle c;
  const auto ts = parse_int64(fields[0]);
  if (!ts) throw Error(ErrorCode::MalformedRow, "bad timestamp '" + std::string(fields[0]) + "'", line);
  c.timestamp = *ts;
  double* targets[] = {&c.open, &c.high, &c.low, &c.close, &c.volume};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto v = parse_double(fields[i + 1]);
    if (!v) {
      throw Error(ErrorCode::MalformedRow, "bad number '" + std::string(fields[i + 1]) + "'", line);
    }
    *targets[i] = *v;
  }
  if (!satisfies_invariants(c)) {
    throw Error(ErrorCode::OhlcViolation,
                "requires 0 < low <= open,close <= high and volume >= 0", line);
  }
  return c;
}

}  // namespace

CandleSeries parse_csv(std::istream& in, const std::string& symbol, std::int64_t interval_seconds,
                       ParseOptions options) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) {
    throw Error(ErrorCode::MalformedRow, "missing header", 1);
  }
  ++line;
  if (trim(text) != kCsvHeader) {
    throw Error(ErrorCode::MalformedRow, "header must be '" + std::string(kCsvHeader) + "'", line);
  }
  std::vector<Row> rows;
  while (std::getline(in, text)) {
    ++line;
    const auto body = trim(text);
    if (body.empty()) continue;
    rows.push_back({parse_row(body, line), line});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.candle.timestamp < b.candle.timestamp;
  });

  const std::int64_t step = interval_seconds * 1000;
  std::vector<Candle> candles;
  candles.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      const auto diff = rows[i].candle.timestamp - rows[i - 1].candle.timestamp;
      if (diff == 0) {
        throw Error(ErrorCode::DuplicateTimestamp,
                    "timestamp " + std::to_string(rows[i].candle.timestamp) + " also on line " +
                        std::to_string(rows[i - 1].line),
                    rows[i].line);
      }
      if (diff != step && !options.allow_gaps) {
        throw Error(ErrorCode::GapDetected,
                    "missing bar(s) before timestamp " + std::to_string(rows[i].candle.timestamp),
                    rows[i].line);
      }
    }
    candles.push_back(rows[i].candle);
  }
  return CandleSeries(symbol, interval_seconds, std::move(candles),
                      options.allow_gaps ? GapPolicy::Allow : GapPolicy::Reject);
}

CandleSeries parse_csv(const std::filesystem::path& path, const std::string& symbol,
                       std::int64_t interval_seconds, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return parse_csv(in, symbol, interval_seconds, options);
}

void write_csv(const CandleSeries& series, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& c : series) {
    out << c.timestamp << ',' << format_double(c.open) << ',' << format_double(c.high) << ','
        << format_double(c.low) << ',' << format_double(c.close) << ','
        << format_double(c.volume) << '\n';
  }
}

void write_csv(const CandleSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_csv(series, out);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace cogtrade::market_data
