#pragma once

#include <optional>
#include <vector>

#include "cogtrade/backtest/backtester.hpp"
#include "cogtrade/broker/simulated_exchange.hpp"

namespace cogtrade::broker {

struct PaperTradeOptions {
  /// Simulates a feed that stops after this many bars: no liquidation, the
  /// open lots are reported instead.
  std::optional<std::size_t> interrupt_after;
};

/// Replays the exchange's feed bar by bar through the same decision pipeline
/// as the backtester and routes every fill through `exchange`. The session
/// report has the backtest report's shape; `orders_sent` counts requests.
struct PaperSession {
  backtest::BacktestReport report;
  std::size_t orders_sent = 0;
  AccountSnapshot exchange_account;
};

PaperSession paper_trade_loop(const strategy::StrategyConfig& config, SimulatedExchange& exchange,
                              const backtest::BacktestSettings& settings = {},
                              const PaperTradeOptions& options = {});

PaperSession paper_trade_loop(std::unique_ptr<strategy::Strategy> custom,
                              const strategy::StrategyConfig& config, SimulatedExchange& exchange,
                              const backtest::BacktestSettings& settings = {},
                              const PaperTradeOptions& options = {});

}  // namespace cogtrade::broker
