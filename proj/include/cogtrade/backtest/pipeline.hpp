#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "cogtrade/backtest/account.hpp"
#include "cogtrade/indicators/streams.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::backtest {

/// Everything decided after a bar closes: stop exits for open lots, then the
/// strategy's closes and opens. Shared by the backtester and paper trading.
class DecisionPipeline {
 public:
  explicit DecisionPipeline(strategy::StrategyConfig config);
  /// Runs `custom` instead of the strategy described by `config`; the config
  /// still supplies the stop settings.
  DecisionPipeline(strategy::StrategyConfig config, std::unique_ptr<strategy::Strategy> custom);

  struct Decision {
    std::vector<TradeIntent> intents;  // stop exits, strategy closes, strategy opens
    bool warming_up = false;
  };

  /// Call once per bar, in order, after that bar's fills are booked.
  Decision decide(const strategy::MarketHistory& history, const std::vector<Lot>& open_lots);

  const strategy::StrategyConfig& config() const noexcept { return config_; }

 private:
  strategy::StrategyConfig config_;
  std::unique_ptr<strategy::Strategy> strategy_;
  std::map<std::string, indicators::AtrStream> atr_;
  std::map<std::uint64_t, strategy::LotStop> stops_;
  std::set<std::uint64_t> exiting_;
};

}  // namespace cogtrade::backtest
