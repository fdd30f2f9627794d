#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cogtrade/indicators/streams.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

enum class Direction { Buy, Sell };

struct CrossSignal {
  std::size_t index = 0;
  Direction direction = Direction::Buy;
  bool operator==(const CrossSignal&) const = default;
};

/// Sign of a - b, with differences within 1e-12 of the larger magnitude
/// counted as zero.
int relative_sign(double a, double b) noexcept;

/// Incremental crossover detector. The EMA difference is treated as zero
/// within a relative 1e-12, and a Buy needs the last non-zero difference to
/// have been negative (or none yet), so Buy and Sell always alternate.
class CrossDetector {
 public:
  /// Throws InvalidPeriods unless 0 < p_short < p_long.
  CrossDetector(std::size_t p_short, std::size_t p_long);

  std::optional<Direction> push(const market_data::Candle& bar);
  std::size_t warmup() const noexcept { return p_long_; }
  std::optional<double> short_value() const noexcept { return short_value_; }
  std::optional<double> long_value() const noexcept { return long_value_; }

 private:
  std::size_t p_long_;
  indicators::EmaKernel fast_;
  indicators::EmaKernel slow_;
  std::size_t seen_ = 0;
  int last_sign_ = 0;
  std::optional<double> short_value_;
  std::optional<double> long_value_;
};

std::vector<CrossSignal> ema_crossover_signals(const market_data::CandleSeries& series,
                                               std::size_t p_short, std::size_t p_long);

}  // namespace cogtrade::strategy
