#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cogtrade/backtest/account.hpp"
#include "cogtrade/backtest/metrics.hpp"
#include "cogtrade/market_data/candle.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::backtest {

using market_data::CandleSeries;

struct BacktestSettings {
  double initial_cash = 10000.0;
  CostSettings costs;
  /// Short selling with unrestricted cash. Unset means on for pairs only.
  std::optional<bool> margin;
  double lambda = kDefaultLambda;

  bool margin_for(const strategy::StrategyConfig& config) const {
    return margin.value_or(config.kind == strategy::StrategyKind::Pairs);
  }
};

enum class OrderStatus { Pending, Filled, Rejected };
std::string to_string(OrderStatus status);

struct Order {
  std::uint64_t id = 0;
  TradeIntent intent;
  std::size_t created_at_bar = 0;
  OrderStatus status = OrderStatus::Pending;
  std::optional<RejectReason> reject_reason;

  bool operator==(const Order&) const = default;
};

struct EquityPoint {
  std::int64_t timestamp = 0;
  double equity = 0.0;
  double cash = 0.0;

  bool operator==(const EquityPoint&) const = default;
};

struct SignalMarker {
  std::size_t bar = 0;
  std::int64_t timestamp = 0;
  std::string symbol;
  strategy::Side side = strategy::Side::OpenLong;
  std::string reason;
  double close = 0.0;

  bool operator==(const SignalMarker&) const = default;
};

struct BacktestReport {
  std::string strategy;
  std::string symbol;
  double initial_cash = 0.0;
  std::vector<EquityPoint> equity;
  std::vector<Fill> fills;
  std::vector<TradeRecord> trades;
  std::vector<Order> orders;
  std::vector<SignalMarker> signals;
  Metrics metrics;
  double score = 0.0;
  double lambda = kDefaultLambda;
  double fees_paid = 0.0;
  /// Open lots were liquidated at the last close.
  bool forced_close = false;
  /// Intents emitted on the last processed bar, never filled.
  std::size_t dropped_intents = 0;
  /// Paper sessions only: the feed stopped early, positions stay open.
  bool interrupted = false;
  std::vector<Lot> open_lots;

  bool operator==(const BacktestReport&) const = default;
};

/// `data` holds the primary series first and any further symbols the
/// strategy needs, all aligned and gap-free.
BacktestReport run_backtest(const strategy::StrategyConfig& config,
                            const std::vector<const CandleSeries*>& data,
                            const BacktestSettings& settings = {});

inline BacktestReport run_backtest(const strategy::StrategyConfig& config, const CandleSeries& data,
                                   const BacktestSettings& settings = {}) {
  return run_backtest(config, std::vector<const CandleSeries*>{&data}, settings);
}

/// Same loop driving a caller-supplied strategy; `config` names the run and
/// supplies the stop settings.
BacktestReport run_backtest(std::unique_ptr<strategy::Strategy> custom,
                            const strategy::StrategyConfig& config,
                            const std::vector<const CandleSeries*>& data,
                            const BacktestSettings& settings = {});

/// Shared by the backtester and paper trading: fills recorded so far turned
/// into trades, metrics and score.
void finalize_report(BacktestReport& report, double lambda);

}  // namespace cogtrade::backtest
