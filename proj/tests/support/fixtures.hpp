#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::testing {

using market_data::Candle;
using market_data::CandleSeries;

inline constexpr std::int64_t kMinute = 60;

/// Bars with open=high=low=close=closes[i] (volume defaults to 1).
CandleSeries flat_bars(const std::vector<double>& closes, std::vector<double> volumes = {},
                       const std::string& symbol = "TEST", std::int64_t interval = kMinute);

/// Geometric random walk with valid OHLCV bars. When `tick` > 0 prices are
/// rounded to that grid, which produces repeated closes.
CandleSeries random_walk(std::uint64_t seed, std::size_t bars, const std::string& symbol = "RW",
                         double start = 100.0, double volatility = 0.01, double tick = 0.0,
                         std::int64_t interval = kMinute, std::int64_t start_ts = 0);

/// Appends `bars` random-walk bars continuing from the last bar of `series`.
CandleSeries extend_random(const CandleSeries& series, std::uint64_t seed, std::size_t bars,
                           double volatility = 0.01);

/// Bars [0, n).
CandleSeries head(const CandleSeries& series, std::size_t n);

}  // namespace cogtrade::testing
