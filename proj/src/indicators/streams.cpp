#include "cogtrade/indicators/streams.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/indicators/volume_profile.hpp"

namespace cogtrade::indicators {

namespace {

double window_sum(const RollingWindow<double>& w) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w.at(i);
  return sum;
}

double true_range(const Candle& c, double prev_close) {
  return std::max({c.high - c.low, std::abs(c.high - prev_close), std::abs(c.low - prev_close)});
}

}  // namespace

EmaKernel::EmaKernel(std::size_t period)
    : period_(period), k_(2.0 / (static_cast<double>(period) + 1.0)) {}

std::optional<double> EmaKernel::push(double x) {
  if (count_ < period_) {
    sum_ += x;
    ++count_;
    if (count_ < period_) return std::nullopt;
    value_ = sum_ / static_cast<double>(period_);
    return value_;
  }
  value_ = k_ * x + (1.0 - k_) * value_;
  return value_;
}

WilderKernel::WilderKernel(std::size_t period) : period_(period) {}

std::optional<double> WilderKernel::push(double x) {
  const auto p = static_cast<double>(period_);
  if (count_ < period_) {
    sum_ += x;
    ++count_;
    if (count_ < period_) return std::nullopt;
    value_ = sum_ / p;
    return value_;
  }
  value_ = ((p - 1.0) * value_ + x) / p;
  return value_;
}

LineValues SmaStream::push(const Candle& c) {
  window.push(c.close);
  if (!window.full()) return {};
  return {window_sum(window) / static_cast<double>(window.capacity()), {}, {}};
}

LineValues RsiStream::push(const Candle& c) {
  const auto prev = prev_close;
  prev_close = c.close;
  if (!prev) return {};
  const double change = c.close - *prev;
  const auto gain = gains.push(change > 0.0 ? change : 0.0);
  const auto loss = losses.push(change < 0.0 ? -change : 0.0);
  if (!gain || !loss) return {};
  if (*loss == 0.0) return {*gain == 0.0 ? 50.0 : 100.0, {}, {}};
  return {100.0 - 100.0 / (1.0 + *gain / *loss), {}, {}};
}

LineValues AtrStream::push(const Candle& c) {
  const auto prev = prev_close;
  prev_close = c.close;
  if (!prev) return {};
  return {tr.push(true_range(c, *prev)), {}, {}};
}

LineValues MacdStream::push(const Candle& c) {
  const auto fast = fast_ema.push(c.close);
  const auto slow = slow_ema.push(c.close);
  if (!fast || !slow) return {};
  const double line = *fast - *slow;
  const auto signal = signal_ema.push(line);
  if (!signal) return {line, {}, {}};
  return {line, *signal, line - *signal};
}

LineValues BollingerStream::push(const Candle& c) {
  window.push(c.close);
  if (!window.full()) return {};
  const auto p = static_cast<double>(window.capacity());
  const double mean = window_sum(window) / p;
  double sq = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const double d = window.at(i) - mean;
    sq += d * d;
  }
  const double sigma = std::sqrt(sq / p);
  return {mean + width * sigma, mean, mean - width * sigma};
}

LineValues ObvStream::push(const Candle& c) {
  if (prev_close) {
    if (c.close > *prev_close) {
      value += c.volume;
    } else if (c.close < *prev_close) {
      value -= c.volume;
    }
  }
  prev_close = c.close;
  return {value, {}, {}};
}

LineValues MomentumStream::push(const Candle& c) {
  window.push(c.close);
  if (!window.full()) return {};
  return {window.newest() - window.at(0), {}, {}};
}

LineValues ForceIndexStream::push(const Candle& c) {
  const auto prev = prev_close;
  prev_close = c.close;
  if (!prev) return {};
  return {ema.push((c.close - *prev) * c.volume), {}, {}};
}

LineValues MfiStream::push(const Candle& c) {
  const double tp = market_data::typical_price(c);
  const auto prev = prev_typical;
  prev_typical = tp;
  if (!prev) return {};
  Flow flow;
  const double raw = tp * c.volume;
  if (tp > *prev) {
    flow.positive = raw;
  } else if (tp < *prev) {
    flow.negative = raw;
  }
  flows.push(flow);
  if (!flows.full()) return {};
  double pos = 0.0;
  double neg = 0.0;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    pos += flows.at(i).positive;
    neg += flows.at(i).negative;
  }
  if (neg == 0.0) return {pos == 0.0 ? 50.0 : 100.0, {}, {}};
  return {100.0 - 100.0 / (1.0 + pos / neg), {}, {}};
}

LineValues CciStream::push(const Candle& c) {
  window.push(market_data::typical_price(c));
  if (!window.full()) return {};
  const auto p = static_cast<double>(window.capacity());
  const double mean = window_sum(window) / p;
  double dev = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) dev += std::abs(window.at(i) - mean);
  dev /= p;
  if (dev == 0.0) return {0.0, {}, {}};
  return {(window.newest() - mean) / (0.015 * dev), {}, {}};
}

LineValues WilliamsRStream::push(const Candle& c) {
  window.push(c);
  if (!window.full()) return {};
  double hh = window.at(0).high;
  double ll = window.at(0).low;
  for (std::size_t i = 1; i < window.size(); ++i) {
    hh = std::max(hh, window.at(i).high);
    ll = std::min(ll, window.at(i).low);
  }
  if (hh == ll) return {0.0, {}, {}};
  return {-100.0 * ((hh - c.close) / (hh - ll)), {}, {}};
}

LineValues AdxStream::push(const Candle& c) {
  const auto prev_bar = prev;
  prev = c;
  if (!prev_bar) return {};
  const double up = c.high - prev_bar->high;
  const double down = prev_bar->low - c.low;
  const auto s_tr = tr.push(true_range(c, prev_bar->close));
  const auto s_plus = plus_dm.push(up > down && up > 0.0 ? up : 0.0);
  const auto s_minus = minus_dm.push(down > up && down > 0.0 ? down : 0.0);
  if (!s_tr) return {};
  double di_plus = 0.0;
  double di_minus = 0.0;
  if (*s_tr > 0.0) {
    di_plus = 100.0 * *s_plus / *s_tr;
    di_minus = 100.0 * *s_minus / *s_tr;
  }
  const double di_sum = di_plus + di_minus;
  const double dx = di_sum > 0.0 ? 100.0 * std::abs(di_plus - di_minus) / di_sum : 0.0;
  return {adx.push(dx), {}, {}};
}

KstStream::KstStream(std::array<std::size_t, 4> roc, std::array<std::size_t, 4> sma)
    : roc_periods(roc), closes(*std::max_element(roc.begin(), roc.end()) + 1) {
  for (auto p : sma) roc_windows.emplace_back(p);
}

LineValues KstStream::push(const Candle& c) {
  closes.push(c.close);
  bool all_ready = true;
  double kst = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    const std::size_t n = roc_periods[j];
    if (closes.size() > n) {
      const double past = closes.at(closes.size() - 1 - n);
      roc_windows[j].push((c.close / past - 1.0) * 100.0);
    }
    if (!roc_windows[j].full()) {
      all_ready = false;
      continue;
    }
    const double smoothed = window_sum(roc_windows[j]) / static_cast<double>(roc_windows[j].capacity());
    kst += static_cast<double>(j + 1) * smoothed;
  }
  if (!all_ready) return {};
  return {kst, {}, {}};
}

LineValues VpvrStream::push(const Candle& c) {
  window.push(c);
  if (!window.full()) return {};
  std::vector<Candle> bars;
  bars.reserve(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) bars.push_back(window.at(i));
  const auto profile = volume_profile(bars, bucket_count);
  return {profile.bucket_mid(profile.point_of_control()), {}, {}};
}

IndicatorStream::IndicatorStream(const IndicatorSpec& spec)
    : spec_(normalize(spec)), impl_(make_impl(spec_)) {}

IndicatorStream::Impl IndicatorStream::make_impl(const IndicatorSpec& s) {
  switch (s.kind) {
    case IndicatorKind::Sma: return SmaStream(s.period("period"));
    case IndicatorKind::Ema: return EmaStream(s.period("period"));
    case IndicatorKind::Rsi: return RsiStream(s.period("period"));
    case IndicatorKind::Atr: return AtrStream(s.period("period"));
    case IndicatorKind::Macd:
      return MacdStream(s.period("fast"), s.period("slow"), s.period("signal"));
    case IndicatorKind::Bollinger: return BollingerStream(s.period("period"), s.param("k"));
    case IndicatorKind::Obv: return ObvStream{};
    case IndicatorKind::Momentum: return MomentumStream(s.period("period"));
    case IndicatorKind::ForceIndex: return ForceIndexStream(s.period("period"));
    case IndicatorKind::Mfi: return MfiStream(s.period("period"));
    case IndicatorKind::Cci: return CciStream(s.period("period"));
    case IndicatorKind::WilliamsR: return WilliamsRStream(s.period("period"));
    case IndicatorKind::Adx: return AdxStream(s.period("period"));
    case IndicatorKind::Kst:
      return KstStream({s.period("roc1"), s.period("roc2"), s.period("roc3"), s.period("roc4")},
                       {s.period("sma1"), s.period("sma2"), s.period("sma3"), s.period("sma4")});
    case IndicatorKind::Vpvr: return VpvrStream(s.period("period"), s.period("buckets"));
  }
  return ObvStream{};
}

LineValues IndicatorStream::push(const Candle& c) {
  return std::visit([&](auto& impl) { return impl.push(c); }, impl_);
}

}  // namespace cogtrade::indicators
