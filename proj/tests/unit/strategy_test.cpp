#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "cogtrade/error.hpp"
#include "cogtrade/indicators/indicators.hpp"
#include "cogtrade/random.hpp"
#include "cogtrade/strategy/ema_cross.hpp"
#include "cogtrade/strategy/strategy.hpp"
#include "cogtrade/strategy/trend.hpp"
#include "fixtures.hpp"
#include "indicator_oracles.hpp"
#include "neat_oracles.hpp"
#include "strategy_gen.hpp"

namespace cogtrade::strategy {
namespace {

using testing::flat_bars;
using testing::random_walk;

std::vector<double> ramp_after_flat(std::size_t flat, std::size_t up, double base = 100.0) {
  std::vector<double> v(flat, base);
  for (std::size_t i = 1; i <= up; ++i) v.push_back(base + static_cast<double>(i));
  return v;
}

std::vector<Candle> bars_of(const CandleSeries& s) { return {s.begin(), s.end()}; }

/// Steps a fresh strategy over every bar.
std::vector<StepResult> run_all(const StrategyConfig& config,
                                const std::vector<const CandleSeries*>& data) {
  auto strat = make_strategy(config);
  std::vector<StepResult> out;
  for (std::size_t t = 0; t < data.front()->size(); ++t) {
    out.push_back(strat->step(MarketHistory(data, t)));
  }
  return out;
}

StrategyConfig ema_config(std::size_t s, std::size_t l) {
  StrategyConfig c;
  c.kind = StrategyKind::EmaCross;
  c.ema = {s, l};
  return c;
}

struct OracleCross {
  std::vector<CrossSignal> signals;
  std::vector<bool> ambiguous;  // |short - long| too close to call at this bar
};

/// Literal crossing rule on oracle EMA columns.
OracleCross oracle_crossings(const CandleSeries& s, std::size_t ps, std::size_t pl) {
  const auto bars = bars_of(s);
  const auto a = testing::oracle::ema(bars, ps);
  const auto b = testing::oracle::ema(bars, pl);
  OracleCross out;
  out.ambiguous.assign(bars.size(), false);
  for (std::size_t i = 0; i < bars.size(); ++i) {
    if (b[i]) out.ambiguous[i] = std::abs(*a[i] - *b[i]) <= 1e-9 * std::abs(*b[i]);
  }
  for (std::size_t i = 1; i < bars.size(); ++i) {
    if (!b[i - 1]) continue;
    const double now = *a[i] - *b[i];
    const double before = *a[i - 1] - *b[i - 1];
    if (now > 0 && before <= 0) out.signals.push_back({i, Direction::Buy});
    if (now < 0 && before >= 0) out.signals.push_back({i, Direction::Sell});
  }
  return out;
}

// ---------------------------------------------------------------- EMA cross

TEST(EmaCross, ConstantSeriesHasNoSignals) {
  const auto s = flat_bars(std::vector<double>(200, 42.0));
  EXPECT_TRUE(ema_crossover_signals(s, 9, 21).empty());
}

TEST(EmaCross, RampAfterFlatGivesExactlyOneBuy) {
  const auto s = flat_bars(ramp_after_flat(40, 60));
  const auto got = ema_crossover_signals(s, 9, 21);
  const auto want = oracle_crossings(s, 9, 21);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].direction, Direction::Buy);
  EXPECT_EQ(got, want.signals);
  EXPECT_EQ(got[0].index, 40u);
}

TEST(EmaCross, RejectsBadPeriods) {
  const auto s = flat_bars(std::vector<double>(30, 1.0));
  EXPECT_THROW(ema_crossover_signals(s, 21, 9), Error);
  EXPECT_THROW(ema_crossover_signals(s, 9, 9), Error);
  EXPECT_THROW(ema_crossover_signals(s, 0, 9), Error);
  try {
    ema_crossover_signals(s, 21, 9);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPeriods);
  }
}

TEST(EmaCross, MatchesOracleScanOnRandomWalks) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    const std::size_t ps = 2 + pick_index(rng, 15);
    const std::size_t pl = ps + 1 + pick_index(rng, 40);
    const auto s = random_walk(seed, 400);
    const auto got = ema_crossover_signals(s, ps, pl);
    const auto want = oracle_crossings(s, ps, pl);
    auto clear = [&](const std::vector<CrossSignal>& v) {
      std::vector<CrossSignal> out;
      for (const auto& x : v) {
        if (!want.ambiguous[x.index] && !want.ambiguous[x.index - 1]) out.push_back(x);
      }
      return out;
    };
    EXPECT_EQ(clear(got), clear(want.signals)) << "seed " << seed;
  }
}

TEST(EmaCross, StrategyOpensOneLongAtOracleCrossing) {
  const auto s = random_walk(11, 300);
  const auto want = oracle_crossings(s, 9, 21);
  const auto steps = run_all(ema_config(9, 21), {&s});
  std::size_t buys = 0;
  for (const auto& sig : want.signals) {
    if (sig.direction != Direction::Buy) continue;
    ++buys;
    const auto& r = steps[sig.index];
    ASSERT_EQ(r.opens.size(), 1u);
    EXPECT_EQ(r.opens[0].side, Side::OpenLong);
    EXPECT_EQ(r.opens[0].symbol, "RW");
    EXPECT_EQ(r.opens[0].size, Size::fraction(1.0));
    EXPECT_TRUE(r.closes.empty());
  }
  EXPECT_GT(buys, 0u);
}

TEST(EmaCross, SignalsAlternateAfterWarmup) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed * 7);
    const std::size_t ps = 1 + pick_index(rng, 10);
    const std::size_t pl = ps + 1 + pick_index(rng, 20);
    // Coarse ticks produce runs of equal closes and touching EMAs.
    const double tick = bernoulli(rng, 0.5) ? 0.5 : 0.0;
    const auto s = random_walk(seed, 500, "RW", 100.0, 0.01, tick);
    const auto sig = ema_crossover_signals(s, ps, pl);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      EXPECT_GE(sig[i].index, pl);
      if (i > 0) EXPECT_NE(sig[i].direction, sig[i - 1].direction) << "seed " << seed;
    }
  }
}

// --------------------------------------------------------------------- grid

StrategyConfig grid_config(double spacing, std::size_t levels) {
  StrategyConfig c;
  c.kind = StrategyKind::Grid;
  c.grid = {spacing, levels};
  return c;
}

TEST(Grid, FlatPriceDoesNothing) {
  const auto s = flat_bars(std::vector<double>(50, 100.0));
  for (const auto& r : run_all(grid_config(1.0, 3), {&s})) {
    EXPECT_TRUE(r.opens.empty());
    EXPECT_TRUE(r.closes.empty());
  }
}

TEST(Grid, DownOneLevelAndBack) {
  const auto s = flat_bars({100.0, 99.0, 100.0});
  const auto steps = run_all(grid_config(1.0, 3), {&s});
  EXPECT_TRUE(steps[0].opens.empty() && steps[0].closes.empty());
  ASSERT_EQ(steps[1].opens.size(), 1u);
  EXPECT_TRUE(steps[1].closes.empty());
  EXPECT_EQ(steps[1].opens[0].side, Side::OpenLong);
  EXPECT_EQ(steps[1].opens[0].tag, "grid-1");
  ASSERT_EQ(steps[2].closes.size(), 1u);
  EXPECT_TRUE(steps[2].opens.empty());
  EXPECT_EQ(steps[2].closes[0].side, Side::CloseLong);
  EXPECT_EQ(steps[2].closes[0].tag, "grid-1");
}

TEST(Grid, AnchorFollowsRisingClosesOnlyWhileFlat) {
  GridState g({1.0, 2});
  g.push(100.0);
  g.push(103.0);
  EXPECT_EQ(*g.anchor(), 103.0);
  g.push(102.0);
  EXPECT_TRUE(g.filled(1));
  g.push(110.0);  // closes level 1; anchor stays frozen on this bar
  EXPECT_FALSE(g.filled(1));
  EXPECT_EQ(*g.anchor(), 103.0);
  g.push(111.0);
  EXPECT_EQ(*g.anchor(), 111.0);
}

TEST(Grid, GapAcrossLevelsOpensEachOnceWithSharedFraction) {
  const auto s = flat_bars({100.0, 96.5});
  const auto steps = run_all(grid_config(1.0, 5), {&s});
  ASSERT_EQ(steps[1].opens.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(steps[1].opens[k].tag, grid_tag(k + 1));
    EXPECT_DOUBLE_EQ(steps[1].opens[k].size.value, 1.0 / 5.0);
  }
}

TEST(Grid, EveryCloseMatchesAnEarlierOpenOneSpacingBelow) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    const double spacing = uniform(rng, 0.2, 2.0);
    const std::size_t levels = 1 + pick_index(rng, 6);
    const auto s = random_walk(seed, 800, "RW", 100.0, 0.01);
    GridState g({spacing, levels});
    std::map<std::size_t, double> held;  // level -> price of that level at the open
    std::map<std::size_t, int> opens, closes;
    for (const auto& bar : s) {
      const auto ev = g.push(bar.close);
      for (auto k : ev.closed) {
        ++closes[k];
        ASSERT_TRUE(held.count(k)) << "close without open, seed " << seed;
        EXPECT_GE(bar.close, held[k] + spacing);
        EXPECT_DOUBLE_EQ(g.level_price(k), held[k]);
        held.erase(k);
      }
      for (auto k : ev.opened) {
        ++opens[k];
        ASSERT_FALSE(held.count(k));
        EXPECT_LE(bar.close, g.level_price(k));
        held[k] = g.level_price(k);
      }
    }
    for (const auto& [k, n] : closes) EXPECT_LE(n, opens[k]);
  }
}

// -------------------------------------------------------------------- pairs

TEST(Pairs, IdenticalSeriesHaveNoSignals) {
  const auto a = random_walk(3, 300);
  EXPECT_TRUE(pairs_signals(a, a, 20, 2.0, 0.5).empty());
}

TEST(Pairs, ScaledSeriesHaveNoSignals) {
  const auto a = random_walk(4, 300, "A");
  std::vector<Candle> b(a.begin(), a.end());
  for (auto& c : b) {
    c.open *= 2;
    c.high *= 2;
    c.low *= 2;
    c.close *= 2;
  }
  EXPECT_TRUE(pairs_signals(a, CandleSeries("B", a.interval(), b), 20, 2.0, 0.5).empty());
}

TEST(Pairs, MisalignedSeriesAreRejected) {
  const auto a = random_walk(5, 50);
  const auto b = random_walk(5, 50, "B", 100.0, 0.01, 0.0, testing::kMinute, 60000);
  EXPECT_THROW(pairs_signals(a, b, 10, 2.0, 0.5), Error);
}

/// Threshold-crossing scan with the z-score recomputed from scratch per bar.
std::vector<PairSignal> oracle_pairs(const CandleSeries& a, const CandleSeries& b, std::size_t n,
                                     double z_in, double z_out) {
  std::vector<double> spread;
  for (std::size_t i = 0; i < a.size(); ++i) spread.push_back(std::log(a[i].close / b[i].close));
  std::vector<std::optional<double>> z(a.size());
  for (std::size_t i = n - 1; i < a.size(); ++i) {
    long double sum = 0, sq = 0;
    for (std::size_t j = i + 1 - n; j <= i; ++j) sum += spread[j];
    const long double mean = sum / n;
    for (std::size_t j = i + 1 - n; j <= i; ++j) sq += (spread[j] - mean) * (spread[j] - mean);
    const double sd = std::sqrt(static_cast<double>(sq / n));
    if (sd > 1e-9) z[i] = (spread[i] - static_cast<double>(mean)) / sd;
  }
  std::vector<PairSignal> out;
  bool in = false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!z[i]) continue;
    if (in && std::abs(*z[i]) < z_out) {
      out.push_back({i, PairAction::Exit});
      in = false;
    } else if (!in && std::abs(*z[i]) > z_in && z[i - 1] && std::abs(*z[i - 1]) <= z_in) {
      out.push_back({i, *z[i] > 0 ? PairAction::ShortA_LongB : PairAction::LongA_ShortB});
      in = true;
    }
  }
  return out;
}

TEST(Pairs, MatchesThresholdCrossingOracle) {
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto [a, b] = testing::pair_series(seed, 600);
    Rng rng(seed);
    const std::size_t n = 5 + pick_index(rng, 40);
    const double z_in = uniform(rng, 1.0, 2.5);
    const double z_out = uniform(rng, 0.0, 0.9);
    const auto got = pairs_signals(a, b, n, z_in, z_out);
    EXPECT_EQ(got, oracle_pairs(a, b, n, z_in, z_out)) << "seed " << seed;
    total += got.size();
  }
  EXPECT_GT(total, 100u);
}

TEST(Pairs, StrategySplitsFractionAcrossLegs) {
  const auto [a, b] = testing::pair_series(9, 400);
  StrategyConfig c;
  c.kind = StrategyKind::Pairs;
  c.pair_symbol = "BBB";
  const auto steps = run_all(c, {&a, &b});
  const auto sig = pairs_signals(a, b, c.pairs.lookback, c.pairs.z_in, c.pairs.z_out);
  ASSERT_FALSE(sig.empty());
  for (const auto& s : sig) {
    const auto& r = steps[s.index];
    if (s.action == PairAction::Exit) {
      ASSERT_EQ(r.closes.size(), 2u);
      continue;
    }
    ASSERT_EQ(r.opens.size(), 2u);
    EXPECT_EQ(r.opens[0].symbol, "AAA");
    EXPECT_EQ(r.opens[1].symbol, "BBB");
    EXPECT_EQ(r.opens[0].size.value, 0.5);
    const bool long_a = s.action == PairAction::LongA_ShortB;
    EXPECT_EQ(r.opens[0].side, long_a ? Side::OpenLong : Side::OpenShort);
    EXPECT_EQ(r.opens[1].side, long_a ? Side::OpenShort : Side::OpenLong);
  }
}

// -------------------------------------------------------------------- trend

TEST(Trend, ConstantSeriesIsSideways) {
  const auto s = flat_bars(std::vector<double>(120, 10.0));
  for (auto t : trend_identify(s, 9, 21, 14, 20.0)) EXPECT_EQ(t, Trend::Sideways);
}

TEST(Trend, RampIsBullishAfterWarmup) {
  std::vector<Candle> bars;
  for (int i = 0; i < 150; ++i) {
    const double c = 100.0 + i;
    bars.push_back({i * 60000LL, c - 0.5, c + 0.5, c - 1.0, c, 10.0});
  }
  const CandleSeries s("UP", testing::kMinute, bars);
  const auto trend = trend_identify(s, 9, 21, 14, 20.0);
  const auto adx = testing::oracle::adx(bars, 14);
  std::size_t first = 0;
  while (!adx[first]) ++first;
  for (std::size_t i = 0; i < trend.size(); ++i) {
    EXPECT_EQ(trend[i], i < std::max<std::size_t>(first, 20) ? Trend::Sideways : Trend::Bullish)
        << i;
  }
}

TEST(Trend, MatchesIndicatorColumns) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto s = random_walk(seed, 300, "RW", 100.0, 0.02);
    const auto bars = bars_of(s);
    const auto a = testing::oracle::ema(bars, 5);
    const auto b = testing::oracle::ema(bars, 20);
    const auto adx = testing::oracle::adx(bars, 10);
    const auto got = trend_identify(s, 5, 20, 10, 25.0);
    for (std::size_t i = 0; i < bars.size(); ++i) {
      Trend want = Trend::Sideways;
      if (b[i] && adx[i]) {
        if (std::abs(*adx[i] - 25.0) < 1e-9 || std::abs(*a[i] - *b[i]) < 1e-9 * *b[i]) continue;
        if (*adx[i] >= 25.0) want = *a[i] > *b[i] ? Trend::Bullish : Trend::Bearish;
      }
      EXPECT_EQ(got[i], want) << "seed " << seed << " bar " << i;
    }
  }
}

// -------------------------------------------------------------------- stops

StopSettings atr_stops() {
  StopSettings s;
  s.enabled = true;
  s.atr_period = 3;
  s.sl_atr = 2.0;
  s.tp_atr = 3.0;
  return s;
}

TEST(Stops, FlatPriceNeverExits) {
  const auto s = atr_stops();
  auto lot = LotStop::start(s, true, 100.0, 100.0, 1.0);
  Candle bar{0, 100, 100.5, 99.5, 100, 1};
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(apply_stops(lot, bar, 1.0, s));
  auto pct = LotStop::start(s, true, 100.0, 100.0, std::nullopt);
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(apply_stops(pct, bar, std::nullopt, s));
}

TEST(Stops, TrailingStopFiresAtFirstBreach) {
  const auto settings = atr_stops();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    // Rise then fall, with ATR measured on the same bars.
    std::vector<double> closes;
    Rng rng(seed);
    double c = 100.0;
    for (int i = 0; i < 30; ++i) closes.push_back(c += uniform(rng, 0.0, 1.5));
    for (int i = 0; i < 40; ++i) closes.push_back(c -= uniform(rng, 0.0, 1.5));
    std::vector<Candle> bars;
    for (std::size_t i = 0; i < closes.size(); ++i) {
      bars.push_back({static_cast<std::int64_t>(i) * 60000, closes[i], closes[i] + 0.4,
                      closes[i] - 0.4, closes[i], 1});
    }
    const auto atr = testing::oracle::atr(bars, settings.atr_period);
    const std::size_t entry = 5;
    // Brute force: stop at bar i is the max of close - m*ATR over entry..i.
    std::optional<std::size_t> want;
    for (std::size_t i = entry + 1; i < bars.size() && !want; ++i) {
      double level = -1e300;
      for (std::size_t j = entry; j <= i; ++j) level = std::max(level, closes[j] - 2.0 * *atr[j]);
      const double target = closes[entry] + 3.0 * *atr[entry];
      if (closes[i] < level || closes[i] > target) want = i;
    }
    auto lot = LotStop::start(settings, true, closes[entry], closes[entry], atr[entry]);
    std::optional<std::size_t> got;
    for (std::size_t i = entry + 1; i < bars.size() && !got; ++i) {
      const double before = lot.stop;
      if (apply_stops(lot, bars[i], atr[i], settings)) got = i;
      EXPECT_GE(lot.stop, before);
    }
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(got, want) << "seed " << seed;
  }
}

TEST(Stops, GapToTargetIsTakeProfit) {
  const auto s = atr_stops();
  auto lot = LotStop::start(s, true, 100.0, 100.0, 1.0);
  const auto kind = apply_stops(lot, {0, 110, 110, 110, 110, 1}, 1.0, s);
  ASSERT_TRUE(kind);
  EXPECT_EQ(reason_of(*kind), "take-profit");
  auto pct = LotStop::start(s, true, 100.0, 100.0, std::nullopt);
  EXPECT_EQ(apply_stops(pct, {0, 90, 90, 90, 90, 1}, 5.0, s), StopKind::StopLoss);
}

TEST(Stops, ShortsMirrorLongs) {
  const auto s = atr_stops();
  auto lot = LotStop::start(s, false, 100.0, 100.0, 1.0);
  EXPECT_EQ(lot.stop, 102.0);
  EXPECT_EQ(lot.target, 97.0);
  EXPECT_FALSE(apply_stops(lot, {0, 99, 99, 99, 99, 1}, 1.0, s));
  EXPECT_EQ(lot.stop, 101.0);
  EXPECT_EQ(apply_stops(lot, {0, 101.5, 101.5, 101.5, 101.5, 1}, 1.0, s), StopKind::StopLoss);
}

TEST(Stops, LongStopNeverDecreases) {
  const auto settings = atr_stops();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto s = random_walk(seed, 300, "RW", 100.0, 0.02);
    indicators::AtrStream atr(settings.atr_period);
    std::optional<LotStop> lot;
    for (const auto& bar : s) {
      const auto a = atr.push(bar)[0];
      if (!lot) {
        lot = LotStop::start(settings, true, bar.close, bar.close, a);
        continue;
      }
      const double before = lot->stop;
      const auto hit = apply_stops(*lot, bar, a, settings);
      EXPECT_GE(lot->stop, before);
      if (hit) lot.reset();
    }
  }
}

// ---------------------------------------------------------- strategy_step

TEST(StrategyStep, ShortHistoryIsWarmingUp) {
  const auto s = random_walk(1, 15);
  StrategyState state;
  for (std::size_t t = 0; t < s.size(); ++t) {
    const auto r = strategy_step(ema_config(9, 21), state, MarketHistory(s, t));
    EXPECT_TRUE(r.warming_up);
    EXPECT_TRUE(r.opens.empty());
    EXPECT_TRUE(r.closes.empty());
  }
}

TEST(StrategyStep, ReplayMatchesSequentialStepping) {
  const auto s = random_walk(2, 200);
  const auto cfg = ema_config(3, 8);
  StrategyState seq;
  for (std::size_t t = 0; t < s.size(); ++t) {
    const auto a = strategy_step(cfg, seq, MarketHistory(s, t));
    StrategyState fresh;
    EXPECT_EQ(a, strategy_step(cfg, fresh, MarketHistory(s, t))) << t;
  }
}

TEST(StrategyStep, CopiedStateContinuesIndependently) {
  const auto s = random_walk(3, 100);
  const auto cfg = grid_config(0.5, 4);
  StrategyState st;
  for (std::size_t t = 0; t < 50; ++t) strategy_step(cfg, st, MarketHistory(s, t));
  StrategyState copy = st;
  for (std::size_t t = 50; t < 100; ++t) {
    EXPECT_EQ(strategy_step(cfg, st, MarketHistory(s, t)),
              strategy_step(cfg, copy, MarketHistory(s, t)));
  }
}

TEST(StrategyStep, FutureBarsNeverChangeIntents) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Rng rng(seed);
    const std::size_t n = 60 + pick_index(rng, 200);
    const auto [a, b] = testing::pair_series(seed, n);
    const auto cfg = testing::random_config(seed, a);
    const std::size_t t = pick_index(rng, n);
    const auto a2 = testing::extend_random(a, seed + 1000, 1 + pick_index(rng, 50));
    const auto b2 = testing::extend_random(b, seed + 2000, a2.size() - b.size());
    StrategyState s1, s2;
    const auto r1 = strategy_step(cfg, s1, MarketHistory({&a, &b}, t));
    const auto r2 = strategy_step(cfg, s2, MarketHistory({&a2, &b2}, t));
    EXPECT_EQ(r1, r2) << "seed " << seed << " kind " << to_string(cfg.kind);
  }
}

TEST(StrategyStep, IdenticalInputsGiveIdenticalStreams) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto [a, b] = testing::pair_series(seed, 300);
    const auto cfg = testing::random_config(seed, a);
    EXPECT_EQ(run_all(cfg, {&a, &b}), run_all(cfg, {&a, &b}));
  }
}

// ------------------------------------------------------------------ network

TEST(Network, TiesHold) {
  EXPECT_EQ(decide(std::vector<double>{0.9, 0.1, 0.2}), NetworkAction::Open);
  EXPECT_EQ(decide(std::vector<double>{0.1, 0.9, 0.2}), NetworkAction::Close);
  EXPECT_EQ(decide(std::vector<double>{0.9, 0.9, 0.2}), NetworkAction::Hold);
  EXPECT_EQ(decide(std::vector<double>{0.5, 0.5, 0.5}), NetworkAction::Hold);
  EXPECT_EQ(decide(std::vector<double>{0.1, 0.2, 0.9}), NetworkAction::Hold);
}

TEST(Network, ZeroStdNormalizesToUnitScale) {
  const auto s = flat_bars(std::vector<double>(40, 5.0));
  const std::vector<indicators::IndicatorSpec> specs{
      indicators::make_spec(indicators::IndicatorKind::Sma, {{"period", 3}})};
  const auto norm = fit_normalizer(specs, s.candles());
  EXPECT_EQ(norm.mean, std::vector<double>{5.0});
  EXPECT_EQ(norm.std, std::vector<double>{1.0});
}

TEST(Network, ShapeMismatchIsRejected) {
  StrategyConfig c;
  c.kind = StrategyKind::NeatNetwork;
  c.indicators = {indicators::make_spec(indicators::IndicatorKind::Rsi)};
  c.neat.genome = neat::Genome::minimal(2, 3);
  c.neat.normalizer = {{0.0}, {1.0}};
  EXPECT_THROW(c.validate(), Error);
}

TEST(Config, ValidationCatchesBadValues) {
  auto c = grid_config(0.0, 3);
  EXPECT_THROW(c.validate(), Error);
  c = ema_config(9, 21);
  c.fraction = 1.5;
  EXPECT_THROW(c.validate(), Error);
  StrategyConfig p;
  p.kind = StrategyKind::Pairs;
  p.pair_symbol = "B";
  p.pairs.z_out = 3.0;
  EXPECT_THROW(p.validate(), Error);
  EXPECT_THROW(strategy_kind_from_string("martingale"), Error);
  EXPECT_EQ(strategy_kind_from_string("ema_cross"), StrategyKind::EmaCross);
}

}  // namespace
}  // namespace cogtrade::strategy
