#include "cogtrade/evolution/tuner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "cogtrade/error.hpp"
#include "cogtrade/number_format.hpp"
#include "cogtrade/random.hpp"

namespace cogtrade::evolution {

ParamRange ParamRange::stepped(std::string name, double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || step <= 0.0 || hi < lo) {
    throw Error(ErrorCode::InvalidConfig, "range for '" + name + "' needs lo <= hi and step > 0");
  }
  ParamRange r{std::move(name), {}};
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 1000000) throw Error(ErrorCode::InvalidConfig, "range for '" + r.name + "' is too large");
  for (std::size_t i = 0; i < count; ++i) r.values.push_back(lo + static_cast<double>(i) * step);
  return r;
}

std::size_t SearchSpace::size() const {
  if (ranges.empty()) return 0;
  std::size_t n = 1;
  for (const auto& r : ranges) n *= r.values.size();
  return n;
}

namespace {

std::size_t as_count(const std::string& name, double v) {
  if (!std::isfinite(v) || v < 0.0 || v != std::floor(v)) {
    throw Error(ErrorCode::InvalidParameter, name + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

ParamSet params_at(const SearchSpace& space, std::size_t ordinal) {
  ParamSet p(space.ranges.size());
  for (std::size_t k = space.ranges.size(); k-- > 0;) {
    const auto& r = space.ranges[k];
    p[k] = {r.name, r.values[ordinal % r.values.size()]};
    ordinal /= r.values.size();
  }
  return p;
}

std::size_t ordinal_of(const SearchSpace& space, const std::vector<std::size_t>& genes) {
  std::size_t o = 0;
  for (std::size_t k = 0; k < genes.size(); ++k) o = o * space.ranges[k].values.size() + genes[k];
  return o;
}

class Evaluator {
 public:
  Evaluator(const strategy::StrategyConfig& base, const SearchSpace& space,
            const std::vector<const market_data::CandleSeries*>& train, const TuneSettings& settings)
      : base_(base), space_(space), train_(train), settings_(settings) {}

  /// Evaluates the ordinals not seen before, in parallel.
  void run(const std::vector<std::size_t>& ordinals) {
    std::vector<std::size_t> todo;
    for (auto o : ordinals) {
      if (!done_.count(o) && std::find(todo.begin(), todo.end(), o) == todo.end()) todo.push_back(o);
    }
    std::vector<Candidate> out(todo.size());
    std::vector<strategy::StrategyConfig> configs(todo.size());
    std::vector<std::size_t> runnable;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      out[i].ordinal = todo[i];
      out[i].params = params_at(space_, todo[i]);
      try {
        configs[i] = apply_params(base_, out[i].params);
        configs[i].validate();
        runnable.push_back(i);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownIndicator) throw;
        out[i].valid = false;
        out[i].error = e.what();
      }
    }
    std::size_t threads = settings_.threads == 0 ? std::thread::hardware_concurrency() : settings_.threads;
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, runnable.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(runnable.size());
    auto worker = [&] {
      for (std::size_t j = next++; j < runnable.size(); j = next++) {
        try {
          const auto i = runnable[j];
          const auto report = backtest::run_backtest(configs[i], train_, settings_.backtest);
          out[i].metrics = report.metrics;
          out[i].score = report.score;
        } catch (...) {
          errors[j] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& c : out) done_.emplace(c.ordinal, std::move(c));
  }

  double fitness(std::size_t ordinal) const {
    const auto& c = done_.at(ordinal);
    return c.valid ? c.score : -std::numeric_limits<double>::infinity();
  }

  std::vector<Candidate> take() {
    std::vector<Candidate> all;
    for (auto& [o, c] : done_) all.push_back(std::move(c));
    return all;
  }

 private:
  const strategy::StrategyConfig& base_;
  const SearchSpace& space_;
  const std::vector<const market_data::CandleSeries*>& train_;
  const TuneSettings& settings_;
  std::map<std::size_t, Candidate> done_;
};

void genetic_search(const SearchSpace& space, const GeneticSettings& ga, Evaluator& eval) {
  if (ga.population == 0 || ga.tournament == 0) {
    throw Error(ErrorCode::InvalidConfig, "genetic search needs a population and tournament size");
  }
  using Genes = std::vector<std::size_t>;
  const std::size_t dims = space.ranges.size();
  std::vector<Genes> pop;
  {
    Rng rng(derive_seed(ga.seed, 0));
    for (std::size_t i = 0; i < ga.population; ++i) {
      Genes g(dims);
      for (std::size_t k = 0; k < dims; ++k) g[k] = pick_index(rng, space.ranges[k].values.size());
      pop.push_back(std::move(g));
    }
  }
  auto ordinals = [&](const std::vector<Genes>& p) {
    std::vector<std::size_t> o;
    for (const auto& g : p) o.push_back(ordinal_of(space, g));
    return o;
  };
  eval.run(ordinals(pop));
  for (std::size_t gen = 1; gen <= ga.generations; ++gen) {
    Rng rng(derive_seed(ga.seed, gen));
    auto fit = [&](const Genes& g) { return eval.fitness(ordinal_of(space, g)); };
    auto select = [&]() -> const Genes& {
      const Genes* best = &pop[pick_index(rng, pop.size())];
      for (std::size_t t = 1; t < ga.tournament; ++t) {
        const Genes& other = pop[pick_index(rng, pop.size())];
        if (fit(other) > fit(*best)) best = &other;
      }
      return *best;
    };
    std::vector<Genes> next;
    // Keep the current best unchanged.
    next.push_back(*std::max_element(pop.begin(), pop.end(),
                                     [&](const Genes& a, const Genes& b) { return fit(a) < fit(b); }));
    while (next.size() < ga.population) {
      Genes child = select();
      if (bernoulli(rng, ga.crossover_rate)) {
        const Genes& other = select();
        for (std::size_t k = 0; k < dims; ++k) {
          if (bernoulli(rng, 0.5)) child[k] = other[k];
        }
      }
      for (std::size_t k = 0; k < dims; ++k) {
        if (bernoulli(rng, ga.mutation_rate)) child[k] = pick_index(rng, space.ranges[k].values.size());
      }
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    eval.run(ordinals(pop));
  }
}

}  // namespace

strategy::StrategyConfig apply_params(strategy::StrategyConfig c, const ParamSet& params) {
  for (const auto& [name, v] : params) {
    if (name == "fraction") {
      c.fraction = v;
    } else if (name == "ema.p_short") {
      c.ema.p_short = as_count(name, v);
    } else if (name == "ema.p_long") {
      c.ema.p_long = as_count(name, v);
    } else if (name == "grid.spacing") {
      c.grid.spacing = v;
    } else if (name == "grid.levels") {
      c.grid.levels = as_count(name, v);
    } else if (name == "pairs.lookback") {
      c.pairs.lookback = as_count(name, v);
    } else if (name == "pairs.z_in") {
      c.pairs.z_in = v;
    } else if (name == "pairs.z_out") {
      c.pairs.z_out = v;
    } else if (name == "stops.atr_period") {
      c.stops.atr_period = as_count(name, v);
    } else if (name == "stops.sl_atr") {
      c.stops.sl_atr = v;
    } else if (name == "stops.tp_atr") {
      c.stops.tp_atr = v;
    } else if (name == "stops.sl_pct") {
      c.stops.sl_pct = v;
    } else if (name == "stops.tp_pct") {
      c.stops.tp_pct = v;
    } else {
      throw Error(ErrorCode::InvalidParameter, "unknown tunable parameter '" + name + "'");
    }
  }
  return c;
}

TuneResult tune_parameters(const strategy::StrategyConfig& base, const SearchSpace& space,
                           const std::vector<const market_data::CandleSeries*>& train,
                           const TuneSettings& settings) {
  if (space.size() == 0) throw Error(ErrorCode::EmptySearchSpace, "search space is empty");
  for (const auto& r : space.ranges) {
    // Unknown names are a config mistake, not an invalid candidate.
    if (!r.values.empty()) (void)apply_params(base, {{r.name, r.values.front()}});
  }
  Evaluator eval(base, space, train, settings);
  if (settings.mode == TuneMode::Grid) {
    std::vector<std::size_t> all(space.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    eval.run(all);
  } else {
    genetic_search(space, settings.genetic, eval);
  }
  TuneResult result;
  result.leaderboard = eval.take();
  std::stable_sort(result.leaderboard.begin(), result.leaderboard.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.valid != b.valid) return a.valid;
                     if (a.valid && a.score != b.score) return a.score > b.score;
                     return a.ordinal < b.ordinal;
                   });
  const auto& top = result.leaderboard.front();
  if (!top.valid) throw Error(ErrorCode::EmptySearchSpace, "no candidate in the search space is valid");
  result.best = top.params;
  result.best_score = top.score;
  result.best_config = apply_params(base, top.params);
  return result;
}

std::string leaderboard_csv(const TuneResult& result) {
  std::ostringstream out;
  out << "rank";
  if (!result.leaderboard.empty()) {
    for (const auto& [name, v] : result.leaderboard.front().params) out << ',' << name;
  }
  out << ",score,net_profit_pct,max_drawdown_pct,win_rate,trades,valid\n";
  std::size_t rank = 1;
  for (const auto& c : result.leaderboard) {
    out << rank++;
    for (const auto& [name, v] : c.params) out << ',' << format_double(v);
    if (c.valid) {
      out << ',' << format_double(c.score) << ',' << format_double(c.metrics.net_profit_pct) << ','
          << format_double(c.metrics.max_drawdown_pct) << ',' << format_double(c.metrics.win_rate)
          << ',' << c.metrics.trade_count << ",1\n";
    } else {
      out << ",,,,,,0\n";
    }
  }
  return out.str();
}

}  // namespace cogtrade::evolution
