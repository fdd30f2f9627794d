#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cogtrade/indicators/indicator_spec.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::indicators {

using market_data::Candle;

/// Up to three output lines per bar; single-line indicators use slot 0.
using LineValues = std::array<std::optional<double>, 3>;

/// Fixed-capacity FIFO; at(0) is the oldest retained element.
template <typename T>
class RollingWindow {
 public:
  explicit RollingWindow(std::size_t capacity) : buf_(capacity) {}

  void push(const T& value) {
    buf_[(head_ + count_) % buf_.size()] = value;
    if (count_ < buf_.size()) {
      ++count_;
    } else {
      head_ = (head_ + 1) % buf_.size();
    }
  }
  bool full() const noexcept { return count_ == buf_.size(); }
  std::size_t size() const noexcept { return count_; }
  std::size_t capacity() const noexcept { return buf_.size(); }
  const T& at(std::size_t i) const { return buf_[(head_ + i) % buf_.size()]; }
  const T& newest() const { return at(count_ - 1); }

 private:
  std::vector<T> buf_;
  std::size_t head_ = 0;
  std::size_t count_ = 0;
};

/// Exponential average seeded with the simple mean of the first p inputs,
/// then v = k*x + (1-k)*v with k = 2/(p+1).
class EmaKernel {
 public:
  explicit EmaKernel(std::size_t period);
  std::optional<double> push(double x);
  std::optional<double> value() const { return ready() ? std::optional(value_) : std::nullopt; }
  bool ready() const noexcept { return count_ >= period_; }

 private:
  std::size_t period_;
  double k_;
  std::size_t count_ = 0;
  double sum_ = 0.0;
  double value_ = 0.0;
};

/// Wilder's running average: seeded with the mean of the first p inputs,
/// then v = ((p-1)*v + x)/p.
class WilderKernel {
 public:
  explicit WilderKernel(std::size_t period);
  std::optional<double> push(double x);
  std::optional<double> value() const { return ready() ? std::optional(value_) : std::nullopt; }
  bool ready() const noexcept { return count_ >= period_; }

 private:
  std::size_t period_;
  std::size_t count_ = 0;
  double sum_ = 0.0;
  double value_ = 0.0;
};

struct SmaStream {
  explicit SmaStream(std::size_t p) : window(p) {}
  RollingWindow<double> window;
  LineValues push(const Candle& c);
};

struct EmaStream {
  explicit EmaStream(std::size_t p) : ema(p) {}
  EmaKernel ema;
  LineValues push(const Candle& c) { return {ema.push(c.close), {}, {}}; }
};

struct RsiStream {
  explicit RsiStream(std::size_t p) : gains(p), losses(p) {}
  WilderKernel gains;
  WilderKernel losses;
  std::optional<double> prev_close;
  LineValues push(const Candle& c);
};

struct AtrStream {
  explicit AtrStream(std::size_t p) : tr(p) {}
  WilderKernel tr;
  std::optional<double> prev_close;
  LineValues push(const Candle& c);
};

struct MacdStream {
  MacdStream(std::size_t fast, std::size_t slow, std::size_t signal)
      : fast_ema(fast), slow_ema(slow), signal_ema(signal) {}
  EmaKernel fast_ema;
  EmaKernel slow_ema;
  EmaKernel signal_ema;
  LineValues push(const Candle& c);
};

struct BollingerStream {
  BollingerStream(std::size_t p, double k) : window(p), width(k) {}
  RollingWindow<double> window;
  double width;
  LineValues push(const Candle& c);
};

struct ObvStream {
  std::optional<double> prev_close;
  double value = 0.0;
  LineValues push(const Candle& c);
};

struct MomentumStream {
  explicit MomentumStream(std::size_t p) : window(p + 1) {}
  RollingWindow<double> window;
  LineValues push(const Candle& c);
};

struct ForceIndexStream {
  explicit ForceIndexStream(std::size_t p) : ema(p) {}
  EmaKernel ema;
  std::optional<double> prev_close;
  LineValues push(const Candle& c);
};

struct MfiStream {
  struct Flow {
    double positive = 0.0;
    double negative = 0.0;
  };
  explicit MfiStream(std::size_t p) : flows(p) {}
  RollingWindow<Flow> flows;
  std::optional<double> prev_typical;
  LineValues push(const Candle& c);
};

struct CciStream {
  explicit CciStream(std::size_t p) : window(p) {}
  RollingWindow<double> window;
  LineValues push(const Candle& c);
};

struct WilliamsRStream {
  explicit WilliamsRStream(std::size_t p) : window(p) {}
  RollingWindow<Candle> window;
  LineValues push(const Candle& c);
};

struct AdxStream {
  explicit AdxStream(std::size_t p) : tr(p), plus_dm(p), minus_dm(p), adx(p) {}
  WilderKernel tr;
  WilderKernel plus_dm;
  WilderKernel minus_dm;
  WilderKernel adx;
  std::optional<Candle> prev;
  LineValues push(const Candle& c);
};

struct KstStream {
  KstStream(std::array<std::size_t, 4> roc, std::array<std::size_t, 4> sma);
  std::array<std::size_t, 4> roc_periods;
  RollingWindow<double> closes;
  std::vector<RollingWindow<double>> roc_windows;
  LineValues push(const Candle& c);
};

struct VpvrStream {
  VpvrStream(std::size_t p, std::size_t buckets) : window(p), bucket_count(buckets) {}
  RollingWindow<Candle> window;
  std::size_t bucket_count;
  LineValues push(const Candle& c);
};

/// Incremental evaluator for any IndicatorSpec. Feeding bars one at a time
/// yields exactly the values of the batch functions (they are built on it).
class IndicatorStream {
 public:
  explicit IndicatorStream(const IndicatorSpec& spec);

  LineValues push(const Candle& c);
  const IndicatorSpec& spec() const noexcept { return spec_; }
  std::size_t lines() const noexcept { return line_count(spec_.kind); }

 private:
  using Impl = std::variant<SmaStream, EmaStream, RsiStream, AtrStream, MacdStream, BollingerStream,
                            ObvStream, MomentumStream, ForceIndexStream, MfiStream, CciStream,
                            WilliamsRStream, AdxStream, KstStream, VpvrStream>;
  static Impl make_impl(const IndicatorSpec& spec);

  IndicatorSpec spec_;
  Impl impl_;
};

}  // namespace cogtrade::indicators
