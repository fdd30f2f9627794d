#include "cogtrade/indicators/indicators.hpp"

#include "cogtrade/error.hpp"
#include "cogtrade/indicators/streams.hpp"

namespace cogtrade::indicators {

std::vector<IndicatorOutput> compute(const IndicatorSpec& raw_spec, std::span<const Candle> candles) {
  const IndicatorSpec spec = normalize(raw_spec);
  const auto warm = warmups(spec);
  for (auto w : warm) {
    if (w >= candles.size()) {
      throw Error(ErrorCode::PeriodExceedsSeries,
                  to_string(spec) + " needs more than " + std::to_string(w) + " bars, series has " +
                      std::to_string(candles.size()));
    }
  }
  IndicatorStream stream(spec);
  const std::size_t lines = stream.lines();
  std::vector<IndicatorOutput> out(lines);
  for (std::size_t l = 0; l < lines; ++l) {
    out[l].values.reserve(candles.size());
    out[l].warmup = warm[l];
  }
  for (const auto& c : candles) {
    const auto values = stream.push(c);
    for (std::size_t l = 0; l < lines; ++l) out[l].values.push_back(values[l]);
  }
  return out;
}

namespace {

IndicatorOutput single(IndicatorKind kind, std::map<std::string, double> params,
                       std::span<const Candle> candles) {
  return std::move(compute(make_spec(kind, std::move(params)), candles).front());
}

double as_param(std::size_t v) { return static_cast<double>(v); }

}  // namespace

IndicatorOutput sma(std::span<const Candle> candles, std::size_t period) {
  return single(IndicatorKind::Sma, {{"period", as_param(period)}}, candles);
}

IndicatorOutput ema(std::span<const Candle> candles, std::size_t period) {
  return single(IndicatorKind::Ema, {{"period", as_param(period)}}, candles);
}

IndicatorOutput rsi(std::span<const Candle> candles, std::size_t period) {
  return single(IndicatorKind::Rsi, {{"period", as_param(period)}}, candles);
}

IndicatorOutput atr(std::span<const Candle> candles, std::size_t period) {
  return single(IndicatorKind::Atr, {{"period", as_param(period)}}, candles);
}

IndicatorOutput obv(std::span<const Candle> candles) {
  if (candles.empty()) throw Error(ErrorCode::PeriodExceedsSeries, "obv of an empty series");
  return single(IndicatorKind::Obv, {}, candles);
}

MacdOutput macd(std::span<const Candle> candles, std::size_t fast, std::size_t slow,
                std::size_t signal) {
  if (fast >= slow) throw Error(ErrorCode::InvalidPeriods, "macd requires fast < slow");
  auto lines = compute(make_spec(IndicatorKind::Macd, {{"fast", as_param(fast)},
                                                       {"slow", as_param(slow)},
                                                       {"signal", as_param(signal)}}),
                       candles);
  return {std::move(lines[0]), std::move(lines[1]), std::move(lines[2])};
}

BollingerOutput bollinger(std::span<const Candle> candles, std::size_t period, double k) {
  auto lines =
      compute(make_spec(IndicatorKind::Bollinger, {{"period", as_param(period)}, {"k", k}}), candles);
  return {std::move(lines[0]), std::move(lines[1]), std::move(lines[2])};
}

IndicatorOutput compute_extended(const IndicatorSpec& spec, std::span<const Candle> candles) {
  switch (spec.kind) {
    case IndicatorKind::Momentum:
    case IndicatorKind::ForceIndex:
    case IndicatorKind::Mfi:
    case IndicatorKind::Cci:
    case IndicatorKind::WilliamsR:
    case IndicatorKind::Adx:
    case IndicatorKind::Kst:
    case IndicatorKind::Vpvr:
      return std::move(compute(spec, candles).front());
    default:
      throw Error(ErrorCode::UnknownIndicator,
                  std::string(to_string(spec.kind)) + " is not an extended indicator");
  }
}

}  // namespace cogtrade::indicators
