#pragma once

#include <cstddef>
#include <cstdint>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::market_data {

/// Bars with from_ts <= timestamp <= to_ts. Throws EmptyWindow when none match.
CandleSeries slice_window(const CandleSeries& series, std::int64_t from_ts, std::int64_t to_ts);

/// Aggregates each run of `factor` bars into one; a trailing partial group is dropped.
CandleSeries resample(const CandleSeries& series, std::size_t factor);

}  // namespace cogtrade::market_data
