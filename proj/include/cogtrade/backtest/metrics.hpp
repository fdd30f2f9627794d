#pragma once

#include <cstddef>
#include <span>

#include "cogtrade/backtest/account.hpp"

namespace cogtrade::backtest {

struct Metrics {
  double net_profit_pct = 0.0;
  double max_drawdown_pct = 0.0;
  double win_rate = 0.0;  // winning trades / trades, 0 without trades
  std::size_t trade_count = 0;

  bool operator==(const Metrics&) const = default;
};

inline constexpr double kDefaultLambda = 0.5;

/// Requires a non-empty curve.
Metrics compute_metrics(std::span<const double> equity, std::span<const TradeRecord> trades);

/// net profit % - lambda * max drawdown %.
double score(const Metrics& metrics, double lambda = kDefaultLambda);

}  // namespace cogtrade::backtest
