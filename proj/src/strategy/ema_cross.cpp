#include "cogtrade/strategy/ema_cross.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::strategy {

namespace {

std::size_t checked_short(std::size_t p_short, std::size_t p_long) {
  if (p_short == 0 || p_short >= p_long) {
    throw Error(ErrorCode::InvalidPeriods, "EMA periods need 0 < p_short < p_long, got " +
                                               std::to_string(p_short) + " and " +
                                               std::to_string(p_long));
  }
  return p_short;
}

}  // namespace

int relative_sign(double a, double b) noexcept {
  const double diff = a - b;
  const double tol = 1e-12 * std::max(std::abs(a), std::abs(b));
  if (std::abs(diff) <= tol) return 0;
  return diff > 0.0 ? 1 : -1;
}

CrossDetector::CrossDetector(std::size_t p_short, std::size_t p_long)
    : p_long_(p_long), fast_(checked_short(p_short, p_long)), slow_(p_long) {}

std::optional<Direction> CrossDetector::push(const market_data::Candle& bar) {
  const std::size_t i = seen_++;
  short_value_ = fast_.push(bar.close);
  long_value_ = slow_.push(bar.close);
  if (!long_value_) return std::nullopt;
  const int sign = relative_sign(*short_value_, *long_value_);
  std::optional<Direction> signal;
  // The first defined bar only establishes the previous side.
  if (i >= p_long_) {
    if (sign > 0 && last_sign_ <= 0) signal = Direction::Buy;
    if (sign < 0 && last_sign_ >= 0) signal = Direction::Sell;
  }
  if (sign != 0) last_sign_ = sign;
  return signal;
}

std::vector<CrossSignal> ema_crossover_signals(const market_data::CandleSeries& series,
                                               std::size_t p_short, std::size_t p_long) {
  CrossDetector detector(p_short, p_long);
  std::vector<CrossSignal> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (auto d = detector.push(series[i])) out.push_back({i, *d});
  }
  return out;
}

}  // namespace cogtrade::strategy
