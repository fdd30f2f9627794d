#include "cogtrade/market_data/transform.hpp"

#include <algorithm>
#include <vector>

#include "cogtrade/error.hpp"

namespace cogtrade::market_data {

CandleSeries slice_window(const CandleSeries& series, std::int64_t from_ts, std::int64_t to_ts) {
  if (from_ts > to_ts) {
    throw Error(ErrorCode::InvalidParameter, "slice_window requires from_ts <= to_ts");
  }
  const auto bars = series.candles();
  const auto first = std::lower_bound(bars.begin(), bars.end(), from_ts,
                                      [](const Candle& c, std::int64_t t) { return c.timestamp < t; });
  const auto last = std::upper_bound(first, bars.end(), to_ts,
                                     [](std::int64_t t, const Candle& c) { return t < c.timestamp; });
  if (first == last) {
    throw Error(ErrorCode::EmptyWindow, "no bars in [" + std::to_string(from_ts) + ", " +
                                            std::to_string(to_ts) + "]");
  }
  return CandleSeries(series.symbol(), series.interval(), std::vector<Candle>(first, last),
                      series.has_gaps() ? GapPolicy::Allow : GapPolicy::Reject);
}

CandleSeries resample(const CandleSeries& series, std::size_t factor) {
  if (factor == 0) throw Error(ErrorCode::InvalidParameter, "resample factor must be >= 1");
  if (series.has_gaps()) throw Error(ErrorCode::GapDetected, "resample requires a gap-free series");
  if (series.size() < factor) {
    throw Error(ErrorCode::EmptyResult, "series has " + std::to_string(series.size()) +
                                            " bars, fewer than factor " + std::to_string(factor));
  }
  const std::size_t groups = series.size() / factor;
  std::vector<Candle> out;
  out.reserve(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const Candle& first = series[g * factor];
    Candle bar = first;
    for (std::size_t i = g * factor + 1; i < (g + 1) * factor; ++i) {
      const Candle& c = series[i];
      bar.high = std::max(bar.high, c.high);
      bar.low = std::min(bar.low, c.low);
      bar.volume += c.volume;
      bar.close = c.close;
    }
    out.push_back(bar);
  }
  return CandleSeries(series.symbol(), series.interval() * static_cast<std::int64_t>(factor),
                      std::move(out));
}

}  // namespace cogtrade::market_data
