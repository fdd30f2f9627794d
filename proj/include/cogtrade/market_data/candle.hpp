#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cogtrade::market_data {

/// One OHLCV bar. Timestamp is the bar open in milliseconds since the epoch (UTC).
struct Candle {
  std::int64_t timestamp = 0;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;
  double volume = 0.0;

  bool operator==(const Candle&) const = default;
};

/// low <= open,close <= high, positive finite prices, non-negative volume.
bool satisfies_invariants(const Candle& candle) noexcept;

inline double typical_price(const Candle& c) noexcept { return (c.high + c.low + c.close) / 3.0; }

enum class GapPolicy { Reject, Allow };

struct DatasetMeta {
  std::string source;
  std::string symbol;
  std::int64_t interval = 0;
  std::int64_t first_ts = 0;
  std::int64_t last_ts = 0;
  std::size_t bar_count = 0;

  bool operator==(const DatasetMeta&) const = default;
};

/// Validated, immutable sequence of bars for one symbol at a fixed interval.
///
/// Timestamps are strictly increasing and, unless the series was built with
/// GapPolicy::Allow, consecutive bars are exactly `interval` seconds apart.
class CandleSeries {
 public:
  CandleSeries(std::string symbol, std::int64_t interval_seconds, std::vector<Candle> candles,
               GapPolicy gaps = GapPolicy::Reject);

  const std::string& symbol() const noexcept { return symbol_; }
  std::int64_t interval() const noexcept { return interval_; }
  std::int64_t interval_ms() const noexcept { return interval_ * 1000; }
  std::span<const Candle> candles() const noexcept { return candles_; }
  std::size_t size() const noexcept { return candles_.size(); }
  bool empty() const noexcept { return candles_.empty(); }
  const Candle& operator[](std::size_t i) const { return candles_[i]; }
  const Candle& front() const { return candles_.front(); }
  const Candle& back() const { return candles_.back(); }
  auto begin() const noexcept { return candles_.begin(); }
  auto end() const noexcept { return candles_.end(); }

  /// Number of missing-bar gaps accepted under GapPolicy::Allow.
  std::size_t gap_count() const noexcept { return gap_count_; }
  bool has_gaps() const noexcept { return gap_count_ > 0; }

  std::vector<double> closes() const;

  /// First `count` bars, same symbol and interval.
  CandleSeries prefix(std::size_t count) const;

  DatasetMeta meta(std::string source) const;

  bool operator==(const CandleSeries&) const = default;

 private:
  std::string symbol_;
  std::int64_t interval_ = 0;
  std::vector<Candle> candles_;
  std::size_t gap_count_ = 0;
};

}  // namespace cogtrade::market_data
