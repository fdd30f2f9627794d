#include "cogtrade/evolution/evolve_strategy.hpp"

#include <algorithm>

#include "cogtrade/error.hpp"

namespace cogtrade::evolution {

strategy::StrategyConfig network_config(const neat::Genome& genome,
                                        const std::vector<indicators::IndicatorSpec>& inputs,
                                        const strategy::Normalizer& normalizer,
                                        const EvolveSettings& settings) {
  strategy::StrategyConfig c;
  c.kind = strategy::StrategyKind::NeatNetwork;
  c.indicators = inputs;
  c.stops = settings.stops;
  c.fraction = settings.fraction;
  c.neat.genome = genome;
  c.neat.normalizer = normalizer;
  return c;
}

StrategyEvolution evolve_strategy(const market_data::CandleSeries& train,
                                  const std::vector<indicators::IndicatorSpec>& inputs,
                                  const EvolveSettings& settings) {
  if (inputs.empty()) throw Error(ErrorCode::InvalidConfig, "network strategy needs indicator inputs");
  std::vector<indicators::IndicatorSpec> specs;
  for (const auto& s : inputs) specs.push_back(indicators::normalize(s));
  std::size_t warmup = 0;
  for (const auto& s : specs) {
    for (auto w : indicators::warmups(s)) warmup = std::max(warmup, w);
  }
  // One bar to decide and one more to fill.
  if (warmup + 2 > train.size()) {
    throw Error(ErrorCode::PeriodExceedsSeries, "training series is shorter than the indicator warmup");
  }
  const auto normalizer = strategy::fit_normalizer(specs, train.candles());
  const std::size_t width = strategy::feature_count(specs);

  const neat::FitnessFn fitness = [&](const neat::Genome& g) {
    if (!neat::outputs_reachable(g)) return settings.penalty_fitness;
    const auto config = network_config(g, specs, normalizer, settings);
    return backtest::run_backtest(config, train, settings.backtest).score;
  };
  StrategyEvolution out;
  out.result = neat::evolve(width, strategy::kNetworkOutputs, settings.neat, fitness);
  out.best_config = network_config(out.result.best, specs, normalizer, settings);
  return out;
}

}  // namespace cogtrade::evolution
