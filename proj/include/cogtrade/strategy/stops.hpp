#pragma once

#include <optional>
#include <string_view>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

struct StopSettings {
  bool enabled = false;
  std::size_t atr_period = 14;
  double sl_atr = 2.0;  // trailing stop distance in ATRs
  double tp_atr = 3.0;  // take-profit distance in ATRs from the entry price
  // Used for the whole life of a lot when ATR is not yet available at entry.
  double sl_pct = 2.0;
  double tp_pct = 4.0;

  /// Throws InvalidConfig.
  void validate() const;
};

enum class StopKind { StopLoss, TakeProfit };
std::string_view reason_of(StopKind kind) noexcept;

/// Stop state for one open lot. For longs `stop` never decreases, for shorts
/// it never increases.
struct LotStop {
  bool is_long = true;
  double entry_price = 0.0;
  bool atr_mode = false;
  double stop = 0.0;
  double target = 0.0;

  /// Levels at the entry bar. With ATR the stop starts from that bar's close.
  static LotStop start(const StopSettings& settings, bool is_long, double entry_price,
                       double entry_close, std::optional<double> atr);
};

/// Tightens the trailing stop with this bar and reports a breach of either
/// level by the bar's close. Breaches are strict.
std::optional<StopKind> apply_stops(LotStop& lot, const market_data::Candle& bar,
                                    std::optional<double> atr, const StopSettings& settings);

}  // namespace cogtrade::strategy
