#include "cogtrade/strategy/trend.hpp"

#include "cogtrade/error.hpp"
#include "cogtrade/indicators/streams.hpp"
#include "cogtrade/strategy/ema_cross.hpp"

namespace cogtrade::strategy {

std::string_view to_string(Trend trend) noexcept {
  switch (trend) {
    case Trend::Bullish: return "Bullish";
    case Trend::Bearish: return "Bearish";
    case Trend::Sideways: return "Sideways";
  }
  return "?";
}

std::vector<Trend> trend_identify(const market_data::CandleSeries& series, std::size_t p_short,
                                  std::size_t p_long, std::size_t adx_period, double adx_min) {
  if (p_short == 0 || p_short >= p_long || adx_period == 0) {
    throw Error(ErrorCode::InvalidPeriods, "trend periods need 0 < p_short < p_long and adx > 0");
  }
  indicators::EmaKernel fast(p_short);
  indicators::EmaKernel slow(p_long);
  indicators::AdxStream adx(adx_period);
  std::vector<Trend> out;
  out.reserve(series.size());
  for (const auto& bar : series) {
    const auto f = fast.push(bar.close);
    const auto s = slow.push(bar.close);
    const auto a = adx.push(bar)[0];
    Trend t = Trend::Sideways;
    if (f && s && a && *a >= adx_min) {
      const int side = relative_sign(*f, *s);
      if (side > 0) t = Trend::Bullish;
      if (side < 0) t = Trend::Bearish;
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace cogtrade::strategy
