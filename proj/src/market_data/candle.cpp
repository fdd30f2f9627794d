#include "cogtrade/market_data/candle.hpp"

#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::market_data {

bool satisfies_invariants(const Candle& c) noexcept {
  for (double v : {c.open, c.high, c.low, c.close}) {
    if (!std::isfinite(v) || v <= 0.0) return false;
  }
  if (!std::isfinite(c.volume) || c.volume < 0.0) return false;
  return c.low <= c.high && c.low <= c.open && c.open <= c.high && c.low <= c.close &&
         c.close <= c.high;
}

CandleSeries::CandleSeries(std::string symbol, std::int64_t interval_seconds,
                           std::vector<Candle> candles, GapPolicy gaps)
    : symbol_(std::move(symbol)), interval_(interval_seconds), candles_(std::move(candles)) {
  if (interval_ <= 0) {
    throw Error(ErrorCode::InvalidParameter, "interval must be positive");
  }
  const std::int64_t step = interval_ms();
  for (std::size_t i = 0; i < candles_.size(); ++i) {
    if (!satisfies_invariants(candles_[i])) {
      throw Error(ErrorCode::OhlcViolation, "bar " + std::to_string(i) + " violates OHLCV invariants");
    }
    if (i == 0) continue;
    const std::int64_t diff = candles_[i].timestamp - candles_[i - 1].timestamp;
    if (diff == 0) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  "timestamp " + std::to_string(candles_[i].timestamp) + " repeated");
    }
    if (diff < 0) {
      throw Error(ErrorCode::MalformedRow, "timestamps not increasing at bar " + std::to_string(i));
    }
    if (diff != step) {
      if (gaps == GapPolicy::Reject) {
        throw Error(ErrorCode::GapDetected, "expected bar at " +
                                                std::to_string(candles_[i - 1].timestamp + step) +
                                                ", found " + std::to_string(candles_[i].timestamp));
      }
      ++gap_count_;
    }
  }
}

std::vector<double> CandleSeries::closes() const {
  std::vector<double> out;
  out.reserve(candles_.size());
  for (const auto& c : candles_) out.push_back(c.close);
  return out;
}

CandleSeries CandleSeries::prefix(std::size_t count) const {
  if (count > candles_.size()) count = candles_.size();
  std::vector<Candle> head(candles_.begin(), candles_.begin() + static_cast<std::ptrdiff_t>(count));
  return CandleSeries(symbol_, interval_, std::move(head),
                      has_gaps() ? GapPolicy::Allow : GapPolicy::Reject);
}

DatasetMeta CandleSeries::meta(std::string source) const {
  DatasetMeta m;
  m.source = std::move(source);
  m.symbol = symbol_;
  m.interval = interval_;
  m.bar_count = candles_.size();
  if (!candles_.empty()) {
    m.first_ts = candles_.front().timestamp;
    m.last_ts = candles_.back().timestamp;
  }
  return m;
}

}  // namespace cogtrade::market_data
