#include "cogtrade/strategy/stops.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::strategy {

void StopSettings::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (atr_period == 0) throw Error(ErrorCode::InvalidConfig, "stop ATR period must be positive");
  if (!positive(sl_atr) || !positive(tp_atr) || !positive(sl_pct) || !positive(tp_pct)) {
    throw Error(ErrorCode::InvalidConfig, "stop distances must be positive and finite");
  }
  if (sl_pct >= 100.0) throw Error(ErrorCode::InvalidConfig, "stop-loss percentage must be below 100");
}

std::string_view reason_of(StopKind kind) noexcept {
  return kind == StopKind::StopLoss ? "stop-loss" : "take-profit";
}

LotStop LotStop::start(const StopSettings& s, bool is_long, double entry_price, double entry_close,
                       std::optional<double> atr) {
  LotStop lot;
  lot.is_long = is_long;
  lot.entry_price = entry_price;
  lot.atr_mode = atr.has_value();
  const double dir = is_long ? 1.0 : -1.0;
  if (lot.atr_mode) {
    lot.stop = entry_close - dir * s.sl_atr * *atr;
    lot.target = entry_price + dir * s.tp_atr * *atr;
  } else {
    lot.stop = entry_price * (1.0 - dir * s.sl_pct / 100.0);
    lot.target = entry_price * (1.0 + dir * s.tp_pct / 100.0);
  }
  return lot;
}

std::optional<StopKind> apply_stops(LotStop& lot, const market_data::Candle& bar,
                                    std::optional<double> atr, const StopSettings& settings) {
  if (lot.atr_mode && atr) {
    if (lot.is_long) {
      lot.stop = std::max(lot.stop, bar.close - settings.sl_atr * *atr);
    } else {
      lot.stop = std::min(lot.stop, bar.close + settings.sl_atr * *atr);
    }
  }
  if (lot.is_long) {
    if (bar.close < lot.stop) return StopKind::StopLoss;
    if (bar.close > lot.target) return StopKind::TakeProfit;
  } else {
    if (bar.close > lot.stop) return StopKind::StopLoss;
    if (bar.close < lot.target) return StopKind::TakeProfit;
  }
  return std::nullopt;
}

}  // namespace cogtrade::strategy
