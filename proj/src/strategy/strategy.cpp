#include "cogtrade/strategy/strategy.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/error.hpp"
#include "cogtrade/strategy/ema_cross.hpp"

namespace cogtrade::strategy {

namespace detail {
std::unique_ptr<Strategy> make_neat_strategy(const StrategyConfig& config);
}

std::string_view to_string(StrategyKind kind) noexcept {
  switch (kind) {
    case StrategyKind::None: return "none";
    case StrategyKind::EmaCross: return "ema_cross";
    case StrategyKind::Grid: return "grid";
    case StrategyKind::Pairs: return "pairs";
    case StrategyKind::NeatNetwork: return "neat";
  }
  return "?";
}

StrategyKind strategy_kind_from_string(std::string_view name) {
  for (auto k : {StrategyKind::None, StrategyKind::EmaCross, StrategyKind::Grid,
                 StrategyKind::Pairs, StrategyKind::NeatNetwork}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown strategy kind '" + std::string(name) + "'");
}

void StrategyConfig::validate() const {
  if (!std::isfinite(fraction) || fraction <= 0.0 || fraction > 1.0) {
    throw Error(ErrorCode::InvalidConfig, "fraction must lie in (0,1]");
  }
  for (const auto& spec : indicators) (void)indicators::normalize(spec);
  if (stops.enabled) stops.validate();
  switch (kind) {
    case StrategyKind::None:
      break;
    case StrategyKind::EmaCross:
      CrossDetector(ema.p_short, ema.p_long);
      break;
    case StrategyKind::Grid:
      if (!std::isfinite(grid.spacing) || grid.spacing <= 0.0) {
        throw Error(ErrorCode::InvalidConfig, "grid spacing must be positive");
      }
      if (grid.levels == 0) throw Error(ErrorCode::InvalidConfig, "grid needs at least one level");
      break;
    case StrategyKind::Pairs:
      pairs.validate();
      if (pair_symbol.empty()) throw Error(ErrorCode::InvalidConfig, "pairs needs a second symbol");
      break;
    case StrategyKind::NeatNetwork: {
      neat::validate(neat.genome);
      const std::size_t inputs = feature_count(indicators);
      if (inputs == 0) throw Error(ErrorCode::InvalidConfig, "network strategy needs indicator inputs");
      if (neat.genome.num_inputs != inputs || neat.genome.num_outputs != kNetworkOutputs) {
        throw Error(ErrorCode::ArityMismatch, "genome shape does not match the indicator inputs");
      }
      if (neat.normalizer.mean.size() != inputs || neat.normalizer.std.size() != inputs) {
        throw Error(ErrorCode::InvalidConfig, "normalizer size does not match the inputs");
      }
      break;
    }
  }
}

std::size_t StrategyConfig::warmup() const {
  switch (kind) {
    case StrategyKind::None: return 0;
    case StrategyKind::EmaCross: return ema.p_long;
    case StrategyKind::Grid: return 1;
    case StrategyKind::Pairs: return pairs.lookback;
    case StrategyKind::NeatNetwork: {
      std::size_t w = 0;
      for (const auto& spec : indicators) {
        for (auto x : indicators::warmups(spec)) w = std::max(w, x);
      }
      return w;
    }
  }
  return 0;
}

std::vector<std::string> StrategyConfig::symbols(const std::string& primary) const {
  if (kind == StrategyKind::Pairs) return {primary, pair_symbol};
  return {primary};
}

namespace {

class NoneStrategy final : public Strategy {
 public:
  StepResult step(const MarketHistory&) override { return {}; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<NoneStrategy>(*this); }
};

class EmaCrossStrategy final : public Strategy {
 public:
  explicit EmaCrossStrategy(const StrategyConfig& c)
      : fraction_(c.fraction), detector_(c.ema.p_short, c.ema.p_long) {}

  StepResult step(const MarketHistory& history) override {
    StepResult r;
    const auto signal = detector_.push(history.current());
    r.warming_up = history.index() < detector_.warmup();
    if (!signal) return r;
    const auto& sym = history.primary_symbol();
    if (*signal == Direction::Buy) {
      r.opens.push_back(open_long(sym, fraction_, "ema-cross-buy"));
    } else {
      r.closes.push_back(close_long(sym, "ema-cross-sell"));
    }
    return r;
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<EmaCrossStrategy>(*this);
  }

 private:
  double fraction_;
  CrossDetector detector_;
};

class GridStrategy final : public Strategy {
 public:
  explicit GridStrategy(const StrategyConfig& c) : fraction_(c.fraction), grid_(c.grid) {}

  StepResult step(const MarketHistory& history) override {
    StepResult r;
    r.warming_up = !grid_.anchor().has_value();
    const std::size_t held_before = grid_.filled_count();
    const auto events = grid_.push(history.current().close);
    const auto& sym = history.primary_symbol();
    for (auto k : events.closed) r.closes.push_back(close_long(sym, "grid-sell", grid_tag(k)));
    // Every level opened in one batch shares the cash left for the free levels.
    const std::size_t free_levels = grid_.params().levels - (held_before - events.closed.size());
    for (auto k : events.opened) {
      r.opens.push_back(open_long(sym, fraction_ / static_cast<double>(free_levels), "grid-buy",
                                  grid_tag(k)));
    }
    return r;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<GridStrategy>(*this); }

 private:
  double fraction_;
  GridState grid_;
};

class PairsStrategy final : public Strategy {
 public:
  explicit PairsStrategy(const StrategyConfig& c)
      : fraction_(c.fraction), lookback_(c.pairs.lookback), symbol_b_(c.pair_symbol), detector_(c.pairs) {}

  StepResult step(const MarketHistory& history) override {
    StepResult r;
    const auto& a = history.primary_symbol();
    const double close_a = history.current().close;
    const double close_b = history.bars(symbol_b_).back().close;
    const auto held = detector_.position();
    const auto action = detector_.push(close_a, close_b);
    r.warming_up = history.index() < lookback_;
    if (!action) return r;
    const double leg = fraction_ / 2.0;
    switch (*action) {
      case PairAction::LongA_ShortB:
        r.opens.push_back(open_long(a, leg, "pairs-entry", "pair"));
        r.opens.push_back(open_short(symbol_b_, leg, "pairs-entry", "pair"));
        break;
      case PairAction::ShortA_LongB:
        r.opens.push_back(open_short(a, leg, "pairs-entry", "pair"));
        r.opens.push_back(open_long(symbol_b_, leg, "pairs-entry", "pair"));
        break;
      case PairAction::Exit:
        if (held == PairAction::LongA_ShortB) {
          r.closes.push_back(close_long(a, "pairs-exit", "pair"));
          r.closes.push_back(close_short(symbol_b_, "pairs-exit", "pair"));
        } else {
          r.closes.push_back(close_short(a, "pairs-exit", "pair"));
          r.closes.push_back(close_long(symbol_b_, "pairs-exit", "pair"));
        }
        break;
    }
    return r;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PairsStrategy>(*this); }

 private:
  double fraction_;
  std::size_t lookback_;
  std::string symbol_b_;
  PairsDetector detector_;
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(const StrategyConfig& config) {
  config.validate();
  switch (config.kind) {
    case StrategyKind::None: return std::make_unique<NoneStrategy>();
    case StrategyKind::EmaCross: return std::make_unique<EmaCrossStrategy>(config);
    case StrategyKind::Grid: return std::make_unique<GridStrategy>(config);
    case StrategyKind::Pairs: return std::make_unique<PairsStrategy>(config);
    case StrategyKind::NeatNetwork: return detail::make_neat_strategy(config);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown strategy kind");
}

StrategyState::StrategyState(const StrategyState& other)
    : impl_(other.impl_ ? other.impl_->clone() : nullptr), next_bar_(other.next_bar_) {}

StrategyState& StrategyState::operator=(const StrategyState& other) {
  if (this != &other) {
    impl_ = other.impl_ ? other.impl_->clone() : nullptr;
    next_bar_ = other.next_bar_;
  }
  return *this;
}

StepResult strategy_step(const StrategyConfig& config, StrategyState& state,
                         const MarketHistory& history) {
  const std::size_t t = history.index();
  if (!state.impl_ || state.next_bar_ != t) {
    state.impl_ = make_strategy(config);
    state.next_bar_ = 0;
    for (std::size_t i = 0; i < t; ++i) state.impl_->step(history.prefix(i));
  }
  auto result = state.impl_->step(history);
  state.next_bar_ = t + 1;
  return result;
}

}  // namespace cogtrade::strategy
