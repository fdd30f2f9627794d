#include "cogtrade/backtest/pipeline.hpp"

namespace cogtrade::backtest {

DecisionPipeline::DecisionPipeline(strategy::StrategyConfig config)
    : config_(std::move(config)), strategy_(strategy::make_strategy(config_)) {}

DecisionPipeline::DecisionPipeline(strategy::StrategyConfig config,
                                   std::unique_ptr<strategy::Strategy> custom)
    : config_(std::move(config)), strategy_(std::move(custom)) {
  if (config_.stops.enabled) config_.stops.validate();
  if (!strategy_) strategy_ = strategy::make_strategy(config_);
}

DecisionPipeline::Decision DecisionPipeline::decide(const strategy::MarketHistory& history,
                                                    const std::vector<Lot>& open_lots) {
  Decision d;
  const auto& settings = config_.stops;
  if (settings.enabled) {
    std::map<std::string, std::optional<double>> atr_now;
    for (const auto& e : history.entries()) {
      auto it = atr_.try_emplace(e.symbol, settings.atr_period).first;
      atr_now[e.symbol] = it->second.push(e.bars.back())[0];
    }
    std::set<std::uint64_t> alive;
    for (const auto& lot : open_lots) {
      alive.insert(lot.id);
      if (exiting_.count(lot.id)) continue;
      const auto& bar = history.bars(lot.symbol).back();
      const auto atr = atr_now[lot.symbol];
      auto it = stops_.find(lot.id);
      if (it == stops_.end()) {
        it = stops_.emplace(lot.id, strategy::LotStop::start(settings, lot.is_long(), lot.entry_price,
                                                             bar.close, atr))
                 .first;
      }
      if (auto hit = strategy::apply_stops(it->second, bar, atr, settings)) {
        TradeIntent exit = lot.is_long() ? strategy::close_long(lot.symbol, std::string(reason_of(*hit)))
                                         : strategy::close_short(lot.symbol, std::string(reason_of(*hit)));
        exit.lot_id = lot.id;
        exit.tag = lot.tag;
        d.intents.push_back(std::move(exit));
        exiting_.insert(lot.id);
        stops_.erase(it);
      }
    }
    std::erase_if(stops_, [&](const auto& kv) { return !alive.count(kv.first); });
    std::erase_if(exiting_, [&](std::uint64_t id) { return !alive.count(id); });
  }
  auto step = strategy_->step(history);
  d.warming_up = step.warming_up;
  for (auto& c : step.closes) d.intents.push_back(std::move(c));
  for (auto& o : step.opens) d.intents.push_back(std::move(o));
  return d;
}

}  // namespace cogtrade::backtest
