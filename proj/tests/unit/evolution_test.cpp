#include <gtest/gtest.h>

#include <cmath>

#include "cogtrade/error.hpp"
#include "cogtrade/evolution/evolve_strategy.hpp"
#include "cogtrade/evolution/tuner.hpp"
#include "fixtures.hpp"

namespace cogtrade::evolution {
namespace {

using strategy::StrategyConfig;
using strategy::StrategyKind;
using testing::random_walk;

StrategyConfig ema_base() {
  StrategyConfig c;
  c.kind = StrategyKind::EmaCross;
  return c;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::IoError;
}

TEST(Tuner, SteppedRangeIncludesBothEnds) {
  const auto r = ParamRange::stepped("x", 0.1, 0.5, 0.1);
  ASSERT_EQ(r.values.size(), 5u);
  EXPECT_DOUBLE_EQ(r.values.back(), 0.5);
  EXPECT_THROW(ParamRange::stepped("x", 1, 0, 1), Error);
}

TEST(Tuner, SingletonSpaceReturnsThatCandidate) {
  const auto s = random_walk(1, 400);
  SearchSpace space{{{"ema.p_short", {5}}, {"ema.p_long", {17}}}};
  const auto r = tune_parameters(ema_base(), space, {&s});
  ASSERT_EQ(r.leaderboard.size(), 1u);
  EXPECT_EQ(r.best, (ParamSet{{"ema.p_short", 5}, {"ema.p_long", 17}}));
  EXPECT_EQ(r.best_config.ema.p_short, 5u);
  EXPECT_EQ(r.best_config.ema.p_long, 17u);
}

TEST(Tuner, BestIsArgmaxOfIndependentBacktests) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = random_walk(seed, 800, "RW", 100.0, 0.02);
    SearchSpace space{{ParamRange::stepped("ema.p_short", 2, 12, 2),
                       ParamRange::stepped("ema.p_long", 10, 40, 6)}};
    TuneSettings settings;
    settings.threads = 3;
    const auto r = tune_parameters(ema_base(), space, {&s}, settings);
    double best = -1e300;
    ParamSet arg;
    std::size_t valid = 0;
    for (double a : space.ranges[0].values) {
      for (double b : space.ranges[1].values) {
        if (a >= b) continue;
        ++valid;
        auto c = ema_base();
        c.ema = {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
        const double sc = backtest::run_backtest(c, s).score;
        if (sc > best) {
          best = sc;
          arg = {{"ema.p_short", a}, {"ema.p_long", b}};
        }
      }
    }
    EXPECT_EQ(r.best, arg) << seed;
    EXPECT_EQ(r.best_score, best);
    EXPECT_EQ(r.leaderboard.size(), space.size());
    std::size_t flagged = 0;
    for (const auto& c : r.leaderboard) flagged += c.valid ? 0 : 1;
    EXPECT_EQ(space.size() - flagged, valid);
    for (std::size_t i = 1; i < valid; ++i) {
      EXPECT_GE(r.leaderboard[i - 1].score, r.leaderboard[i].score);
    }
  }
}

TEST(Tuner, TiesGoToFirstEnumerated) {
  // Flat prices: every candidate scores zero.
  const auto s = testing::flat_bars(std::vector<double>(100, 5.0));
  SearchSpace space{{{"ema.p_short", {3, 4}}, {"ema.p_long", {10, 20}}}};
  const auto r = tune_parameters(ema_base(), space, {&s});
  EXPECT_EQ(r.best, (ParamSet{{"ema.p_short", 3}, {"ema.p_long", 10}}));
  for (std::size_t i = 0; i < r.leaderboard.size(); ++i) EXPECT_EQ(r.leaderboard[i].ordinal, i);
}

TEST(Tuner, GeneticModeIsArgmaxOfItsLeaderboardAndDeterministic) {
  const auto s = random_walk(3, 600, "RW", 100.0, 0.02);
  SearchSpace space{{ParamRange::stepped("ema.p_short", 2, 20, 1),
                     ParamRange::stepped("ema.p_long", 10, 60, 2)}};
  TuneSettings settings;
  settings.mode = TuneMode::Genetic;
  settings.genetic.seed = 42;
  const auto a = tune_parameters(ema_base(), space, {&s}, settings);
  settings.threads = 4;
  const auto b = tune_parameters(ema_base(), space, {&s}, settings);
  EXPECT_EQ(leaderboard_csv(a), leaderboard_csv(b));
  EXPECT_LT(a.leaderboard.size(), space.size());
  for (const auto& c : a.leaderboard) {
    if (c.valid) EXPECT_LE(c.score, a.best_score);
  }
  EXPECT_EQ(a.best, a.leaderboard.front().params);
}

TEST(Tuner, Errors) {
  const auto s = random_walk(1, 100);
  EXPECT_EQ(code_of([&] { tune_parameters(ema_base(), SearchSpace{}, {&s}); }),
            ErrorCode::EmptySearchSpace);
  EXPECT_EQ(code_of([&] {
              tune_parameters(ema_base(), SearchSpace{{{"ema.p_short", {}}}}, {&s});
            }),
            ErrorCode::EmptySearchSpace);
  // Every candidate has p_short >= p_long.
  EXPECT_EQ(code_of([&] {
              tune_parameters(ema_base(), SearchSpace{{{"ema.p_short", {30}}, {"ema.p_long", {20}}}},
                              {&s});
            }),
            ErrorCode::EmptySearchSpace);
  EXPECT_EQ(code_of([&] { tune_parameters(ema_base(), SearchSpace{{{"nope", {1}}}}, {&s}); }),
            ErrorCode::InvalidParameter);
  EXPECT_THROW(apply_params(ema_base(), {{"ema.p_long", 2.5}}), Error);
}

TEST(Tuner, LeaderboardCsvShape) {
  const auto s = random_walk(2, 300);
  SearchSpace space{{{"ema.p_short", {3, 30}}, {"ema.p_long", {20}}}};
  const auto csv = leaderboard_csv(tune_parameters(ema_base(), space, {&s}));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "rank,ema.p_short,ema.p_long,score,net_profit_pct,max_drawdown_pct,win_rate,trades,valid");
  EXPECT_NE(csv.find("2,30,20,,,,,,0"), std::string::npos);
}

// ------------------------------------------------------------------ evolve

EvolveSettings small_run(std::size_t generations) {
  EvolveSettings s;
  s.neat.population = 20;
  s.neat.max_generations = generations;
  s.neat.seed = 9;
  return s;
}

std::vector<indicators::IndicatorSpec> inputs() {
  using indicators::IndicatorKind;
  return {indicators::make_spec(IndicatorKind::Rsi, {{"period", 7}}),
          indicators::make_spec(IndicatorKind::Momentum, {{"period", 3}})};
}

TEST(EvolveStrategy, ZeroGenerationsPicksBestInitialGenome) {
  const auto s = random_walk(5, 400, "RW", 100.0, 0.02);
  const auto settings = small_run(0);
  const auto out = evolve_strategy(s, inputs(), settings);
  ASSERT_EQ(out.result.history.size(), 1u);
  // Recompute every initial genome's score by hand.
  auto pop = neat::initial_population(2, 3, settings.neat);
  const auto norm = strategy::fit_normalizer(inputs(), s.candles());
  double best = -1e300;
  for (const auto& g : pop.genomes) {
    const auto cfg = network_config(g, inputs(), norm, settings);
    best = std::max(best, backtest::run_backtest(cfg, s).score);
  }
  EXPECT_EQ(out.result.history[0].best, best);
  EXPECT_EQ(*out.result.best.fitness, best);
  EXPECT_EQ(backtest::run_backtest(out.best_config, s).score, best);
}

TEST(EvolveStrategy, SeededRunsAreIdentical) {
  const auto s = random_walk(6, 300, "RW", 100.0, 0.02);
  auto settings = small_run(4);
  const auto a = evolve_strategy(s, inputs(), settings);
  settings.neat.threads = 3;
  const auto b = evolve_strategy(s, inputs(), settings);
  ASSERT_EQ(a.result.history.size(), b.result.history.size());
  for (std::size_t i = 0; i < a.result.history.size(); ++i) {
    EXPECT_EQ(a.result.history[i].best, b.result.history[i].best);
    EXPECT_EQ(a.result.history[i].mean, b.result.history[i].mean);
  }
  EXPECT_EQ(a.result.best, b.result.best);
  for (std::size_t i = 1; i < a.result.history.size(); ++i) {
    EXPECT_GE(a.result.history[i].best, a.result.history[i - 1].best);
  }
}

TEST(EvolveStrategy, ShortSeriesIsRejected) {
  const auto s = random_walk(1, 5);
  EXPECT_EQ(code_of([&] { evolve_strategy(s, inputs(), small_run(1)); }),
            ErrorCode::PeriodExceedsSeries);
  EXPECT_THROW(evolve_strategy(s, {}, small_run(1)), Error);
}

TEST(EvolveStrategy, UnreachableOutputGetsPenalty) {
  neat::Genome g = neat::Genome::minimal(2, 3);
  EXPECT_FALSE(neat::outputs_reachable(g));
  EvolveSettings s;
  EXPECT_LT(s.penalty_fitness, -150.0);
}

}  // namespace
}  // namespace cogtrade::evolution
