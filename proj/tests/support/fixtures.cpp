#include "fixtures.hpp"

#include <algorithm>
#include <cmath>

namespace cogtrade::testing {

CandleSeries flat_bars(const std::vector<double>& closes, std::vector<double> volumes,
                       const std::string& symbol, std::int64_t interval) {
  if (volumes.empty()) volumes.assign(closes.size(), 1.0);
  std::vector<Candle> candles;
  for (std::size_t i = 0; i < closes.size(); ++i) {
    const double c = closes[i];
    candles.push_back({static_cast<std::int64_t>(i) * interval * 1000, c, c, c, c, volumes[i]});
  }
  return CandleSeries(symbol, interval, std::move(candles));
}

namespace {

std::vector<Candle> walk(std::mt19937_64& rng, std::size_t bars, double prev_close,
                         double volatility, double tick, std::int64_t ts, std::int64_t step) {
  std::normal_distribution<double> shock(0.0, volatility);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto snap = [tick](double v) {
    if (tick <= 0.0) return v;
    return std::max(tick, std::round(v / tick) * tick);
  };
  std::vector<Candle> out;
  out.reserve(bars);
  for (std::size_t i = 0; i < bars; ++i) {
    Candle c;
    c.timestamp = ts + static_cast<std::int64_t>(i) * step;
    c.open = snap(prev_close * std::exp(0.2 * shock(rng)));
    c.close = snap(c.open * std::exp(shock(rng)));
    c.high = snap(std::max(c.open, c.close) * (1.0 + volatility * unit(rng)));
    c.low = snap(std::min(c.open, c.close) * (1.0 - volatility * unit(rng)));
    c.high = std::max({c.high, c.open, c.close});
    c.low = std::min({c.low, c.open, c.close});
    c.volume = unit(rng) < 0.02 ? 0.0 : std::floor(100.0 + 900.0 * unit(rng));
    prev_close = c.close;
    out.push_back(c);
  }
  return out;
}

}  // namespace

CandleSeries random_walk(std::uint64_t seed, std::size_t bars, const std::string& symbol,
                         double start, double volatility, double tick, std::int64_t interval,
                         std::int64_t start_ts) {
  std::mt19937_64 rng(seed);
  return CandleSeries(symbol, interval,
                      walk(rng, bars, start, volatility, tick, start_ts, interval * 1000));
}

CandleSeries extend_random(const CandleSeries& series, std::uint64_t seed, std::size_t bars,
                           double volatility) {
  std::mt19937_64 rng(seed);
  std::vector<Candle> candles(series.begin(), series.end());
  const auto more = walk(rng, bars, series.back().close, volatility, 0.0,
                         series.back().timestamp + series.interval_ms(), series.interval_ms());
  candles.insert(candles.end(), more.begin(), more.end());
  return CandleSeries(series.symbol(), series.interval(), std::move(candles));
}

CandleSeries head(const CandleSeries& series, std::size_t n) {
  return CandleSeries(series.symbol(), series.interval(),
                      std::vector<Candle>(series.begin(), series.begin() + static_cast<long>(n)));
}

}  // namespace cogtrade::testing
