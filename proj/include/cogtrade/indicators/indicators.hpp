#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cogtrade/indicators/indicator_spec.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::indicators {

using market_data::Candle;
using market_data::CandleSeries;

/// Index-aligned indicator values. Entries before `warmup` are undefined,
/// every entry from `warmup` on is defined.
struct IndicatorOutput {
  std::vector<std::optional<double>> values;
  std::size_t warmup = 0;

  std::size_t size() const noexcept { return values.size(); }
  bool defined(std::size_t i) const { return values[i].has_value(); }
  double operator[](std::size_t i) const { return *values[i]; }
};

struct MacdOutput {
  IndicatorOutput macd_line;
  IndicatorOutput signal_line;
  IndicatorOutput histogram;
};

struct BollingerOutput {
  IndicatorOutput upper;
  IndicatorOutput middle;
  IndicatorOutput lower;
};

// All functions throw PeriodExceedsSeries when the series is too short to
// produce a single defined value on every output line.

IndicatorOutput sma(std::span<const Candle> candles, std::size_t period);
IndicatorOutput ema(std::span<const Candle> candles, std::size_t period);
IndicatorOutput rsi(std::span<const Candle> candles, std::size_t period);
IndicatorOutput atr(std::span<const Candle> candles, std::size_t period);
MacdOutput macd(std::span<const Candle> candles, std::size_t fast, std::size_t slow,
                std::size_t signal);
BollingerOutput bollinger(std::span<const Candle> candles, std::size_t period, double k);
IndicatorOutput obv(std::span<const Candle> candles);

/// Any indicator by spec; one IndicatorOutput per output line.
std::vector<IndicatorOutput> compute(const IndicatorSpec& spec, std::span<const Candle> candles);

/// The less common indicators (Momentum, ForceIndex, MFI, CCI, WilliamsR, ADX,
/// KST, VPVR). Other kinds are rejected with UnknownIndicator.
IndicatorOutput compute_extended(const IndicatorSpec& spec, std::span<const Candle> candles);

inline std::vector<IndicatorOutput> compute(const IndicatorSpec& spec, const CandleSeries& s) {
  return compute(spec, s.candles());
}

}  // namespace cogtrade::indicators
