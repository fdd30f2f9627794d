#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cogtrade/indicators/indicator_spec.hpp"
#include "cogtrade/neat/genome.hpp"
#include "cogtrade/strategy/grid.hpp"
#include "cogtrade/strategy/history.hpp"
#include "cogtrade/strategy/intent.hpp"
#include "cogtrade/strategy/neat_network.hpp"
#include "cogtrade/strategy/pairs.hpp"
#include "cogtrade/strategy/stops.hpp"

namespace cogtrade::strategy {

enum class StrategyKind { None, EmaCross, Grid, Pairs, NeatNetwork };

std::string_view to_string(StrategyKind kind) noexcept;
/// Throws InvalidConfig.
StrategyKind strategy_kind_from_string(std::string_view name);

struct EmaCrossParams {
  std::size_t p_short = 9;
  std::size_t p_long = 21;
};

struct NeatParams {
  neat::Genome genome;
  Normalizer normalizer;
};

struct StrategyConfig {
  StrategyKind kind = StrategyKind::None;
  /// Indicator inputs. NeatNetwork feeds them to the network; the other
  /// kinds only report them.
  std::vector<indicators::IndicatorSpec> indicators;
  StopSettings stops;
  /// Fraction of available cash committed per open; pairs split it evenly
  /// between the two legs and grids across the free levels.
  double fraction = 1.0;
  EmaCrossParams ema;
  GridParams grid;
  PairsParams pairs;
  /// Second leg for pairs.
  std::string pair_symbol;
  NeatParams neat;

  /// Throws InvalidConfig or InvalidPeriods.
  void validate() const;
  /// Bars needed before the strategy can emit anything.
  std::size_t warmup() const;
  /// Symbols the strategy reads, primary first.
  std::vector<std::string> symbols(const std::string& primary) const;
};

struct StepResult {
  std::vector<TradeIntent> opens;
  std::vector<TradeIntent> closes;
  /// Inputs still warming up; both lists are empty.
  bool warming_up = false;

  bool operator==(const StepResult&) const = default;
};

/// One strategy instance. step() must be called once per bar, in order,
/// starting at bar 0.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual StepResult step(const MarketHistory& history) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
};

std::unique_ptr<Strategy> make_strategy(const StrategyConfig& config);

/// Mutable memory carried between calls to strategy_step.
class StrategyState {
 public:
  StrategyState() = default;
  StrategyState(const StrategyState& other);
  StrategyState& operator=(const StrategyState& other);
  StrategyState(StrategyState&&) noexcept = default;
  StrategyState& operator=(StrategyState&&) noexcept = default;

  /// Index of the next bar the state expects.
  std::size_t next_bar() const noexcept { return next_bar_; }

 private:
  friend StepResult strategy_step(const StrategyConfig&, StrategyState&, const MarketHistory&);
  std::unique_ptr<Strategy> impl_;
  std::size_t next_bar_ = 0;
};

/// Advances `state` to bar history.index(). If the state is not positioned
/// at that bar it is rebuilt by replaying bars 0..t-1, so the result only
/// depends on (config, bars 0..t).
StepResult strategy_step(const StrategyConfig& config, StrategyState& state,
                         const MarketHistory& history);

}  // namespace cogtrade::strategy
