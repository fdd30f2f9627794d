#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cogtrade/backtest/backtester.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::evolution {

/// One tunable parameter and the values it may take, in enumeration order.
struct ParamRange {
  std::string name;
  std::vector<double> values;

  /// lo, lo+step, ... up to hi (inclusive, with a small tolerance).
  /// Throws InvalidConfig.
  static ParamRange stepped(std::string name, double lo, double hi, double step);
};

/// The cartesian product of its ranges. Candidates are enumerated with the
/// last range varying fastest.
struct SearchSpace {
  std::vector<ParamRange> ranges;

  std::size_t size() const;
};

using ParamSet = std::vector<std::pair<std::string, double>>;

/// Names accepted by apply_params: fraction, ema.p_short, ema.p_long,
/// grid.spacing, grid.levels, pairs.lookback, pairs.z_in, pairs.z_out,
/// stops.atr_period, stops.sl_atr, stops.tp_atr, stops.sl_pct, stops.tp_pct.
/// Throws InvalidParameter for unknown names or non-integral counts.
strategy::StrategyConfig apply_params(strategy::StrategyConfig base, const ParamSet& params);

struct Candidate {
  ParamSet params;
  std::size_t ordinal = 0;  // position in grid enumeration
  bool valid = true;        // false when the parameters fail validation
  std::string error;
  backtest::Metrics metrics;
  double score = 0.0;
};

enum class TuneMode { Grid, Genetic };

/// Genetic search over the grid's index space. Each distinct candidate is
/// backtested once.
struct GeneticSettings {
  std::size_t population = 16;
  std::size_t generations = 10;
  double crossover_rate = 0.7;
  double mutation_rate = 0.2;  // per gene
  std::size_t tournament = 3;
  std::uint64_t seed = 0;
};

struct TuneSettings {
  TuneMode mode = TuneMode::Grid;
  GeneticSettings genetic;
  backtest::BacktestSettings backtest;
  std::size_t threads = 1;  // 0 = hardware concurrency
};

struct TuneResult {
  ParamSet best;
  double best_score = 0.0;
  strategy::StrategyConfig best_config;
  /// Every evaluated candidate, best score first; ties keep enumeration order
  /// and invalid candidates come last.
  std::vector<Candidate> leaderboard;
};

/// Backtests candidates on `train` and returns the highest scoring one (the
/// first enumerated on ties). Throws EmptySearchSpace when there is nothing to
/// evaluate or no candidate is valid.
TuneResult tune_parameters(const strategy::StrategyConfig& base, const SearchSpace& space,
                           const std::vector<const market_data::CandleSeries*>& train,
                           const TuneSettings& settings = {});

/// rank,<param names...>,score,net_profit_pct,max_drawdown_pct,win_rate,trades,valid
std::string leaderboard_csv(const TuneResult& result);

}  // namespace cogtrade::evolution
