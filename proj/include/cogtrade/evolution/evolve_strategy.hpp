#pragma once

#include <vector>

#include "cogtrade/backtest/backtester.hpp"
#include "cogtrade/indicators/indicator_spec.hpp"
#include "cogtrade/neat/config.hpp"
#include "cogtrade/neat/population.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::evolution {

struct EvolveSettings {
  neat::EvolutionConfig neat;
  backtest::BacktestSettings backtest;
  strategy::StopSettings stops;
  double fraction = 1.0;
  /// Fitness of genomes with an output no input or bias can reach. Below any
  /// reachable score (a spot run scores at least -150).
  double penalty_fitness = -200.0;
};

struct StrategyEvolution {
  neat::EvolutionResult result;
  /// Ready-to-run network strategy around result.best.
  strategy::StrategyConfig best_config;
};

/// Network strategy config for `genome` with the normalizer fitted on `train`.
strategy::StrategyConfig network_config(const neat::Genome& genome,
                                        const std::vector<indicators::IndicatorSpec>& inputs,
                                        const strategy::Normalizer& normalizer,
                                        const EvolveSettings& settings);

/// Evolves networks whose fitness is the backtest score on `train`. Throws
/// PeriodExceedsSeries when the indicator warmups leave no bar to trade.
StrategyEvolution evolve_strategy(const market_data::CandleSeries& train,
                                  const std::vector<indicators::IndicatorSpec>& inputs,
                                  const EvolveSettings& settings = {});

}  // namespace cogtrade::evolution
