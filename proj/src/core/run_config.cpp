#include "cogtrade/core/run_config.hpp"

#include <cmath>
#include <set>

#include "cogtrade/error.hpp"
#include "cogtrade/file_io.hpp"
#include "cogtrade/neat/genome_io.hpp"

namespace cogtrade::core {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, where + ": " + what);
}

/// Typed access to one JSON object that remembers which keys were read.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) bad(path_, "expected an object");
  }
  ~Section() = default;

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key) && !j_.at(key).is_null();
  }
  std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const json& raw(const std::string& key) { return (void)has(key), j_.at(key); }

  template <typename T>
  void read(const std::string& key, T& out) {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) bad(where(key), "expected true or false");
      out = v.get<bool>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) bad(where(key), "expected a string");
      out = v.get<std::string>();
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) bad(where(key), "expected a number");
      out = v.get<T>();
    } else {
      if (!v.is_number_integer() || (std::is_unsigned_v<T> && v.get<std::int64_t>() < 0)) {
        bad(where(key), "expected a non-negative integer");
      }
      out = v.get<T>();
    }
  }
  template <typename T>
  void read(const std::string& key, std::optional<T>& out) {
    if (!has(key)) return;
    T v{};
    read(key, v);
    out = v;
  }
  void read_path(const std::string& key, fs::path& out, const fs::path& base) {
    std::string s;
    read(key, s);
    if (!s.empty()) out = base / s;
  }
  Section sub(const std::string& key) { return Section(raw(key), where(key)); }

  /// Throws when the object has keys nobody asked for.
  void finish() const {
    for (const auto& [k, v] : j_.items()) {
      if (!seen_.count(k)) bad(where(k), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::vector<indicators::IndicatorSpec> read_specs(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of indicator specs");
  std::vector<indicators::IndicatorSpec> out;
  for (const auto& item : j) {
    if (!item.is_string()) bad(where, "indicator specs are strings like \"rsi:period=14\"");
    out.push_back(indicators::normalize(indicators::parse_indicator_spec(item.get<std::string>())));
  }
  return out;
}

std::vector<double> read_numbers(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) bad(where, "expected a list of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

void read_stops(Section s, strategy::StopSettings& stops) {
  s.read("enabled", stops.enabled);
  s.read("atr_period", stops.atr_period);
  s.read("sl_atr", stops.sl_atr);
  s.read("tp_atr", stops.tp_atr);
  s.read("sl_pct", stops.sl_pct);
  s.read("tp_pct", stops.tp_pct);
  s.finish();
}

void read_strategy(Section s, strategy::StrategyConfig& c, const fs::path& base) {
  std::string kind = "none";
  s.read("kind", kind);
  c.kind = strategy::strategy_kind_from_string(kind);
  s.read("fraction", c.fraction);
  if (s.has("indicators")) c.indicators = read_specs(s.raw("indicators"), s.where("indicators"));
  if (s.has("stops")) read_stops(s.sub("stops"), c.stops);
  if (s.has("ema")) {
    auto e = s.sub("ema");
    e.read("p_short", c.ema.p_short);
    e.read("p_long", c.ema.p_long);
    e.finish();
  }
  if (s.has("grid")) {
    auto g = s.sub("grid");
    g.read("spacing", c.grid.spacing);
    g.read("levels", c.grid.levels);
    g.finish();
  }
  if (s.has("pairs")) {
    auto p = s.sub("pairs");
    p.read("symbol", c.pair_symbol);
    p.read("lookback", c.pairs.lookback);
    p.read("z_in", c.pairs.z_in);
    p.read("z_out", c.pairs.z_out);
    p.finish();
  }
  fs::path genome;
  s.read_path("genome", genome, base);
  if (!genome.empty()) c.neat.genome = neat::load_genome(genome);
  if (s.has("normalizer")) {
    auto n = s.sub("normalizer");
    c.neat.normalizer.mean = read_numbers(n.raw("mean"), n.where("mean"));
    c.neat.normalizer.std = read_numbers(n.raw("std"), n.where("std"));
    n.finish();
  }
  s.finish();
  if (c.kind == strategy::StrategyKind::NeatNetwork && genome.empty()) {
    bad("strategy.genome", "the network strategy needs a genome file");
  }
  c.validate();
}

void read_neat(Section s, neat::EvolutionConfig& n) {
  s.read("population", n.population);
  s.read("c1", n.c1);
  s.read("c2", n.c2);
  s.read("c3", n.c3);
  s.read("compatibility_threshold", n.compatibility_threshold);
  s.read("crossover_rate", n.crossover_rate);
  s.read("survival_threshold", n.survival_threshold);
  s.read("elitism", n.elitism);
  s.read("species_elitism_min_size", n.species_elitism_min_size);
  s.read("staleness_limit", n.staleness_limit);
  s.read("max_generations", n.max_generations);
  s.read("fitness_threshold", n.fitness_threshold);
  s.read("weight_rate", n.mutation.weight);
  s.read("weight_step", n.mutation.weight_step);
  s.read("weight_reset", n.mutation.weight_reset);
  s.read("weight_init", n.mutation.weight_init);
  s.read("add_connection", n.mutation.add_connection);
  s.read("add_node", n.mutation.add_node);
  s.read("reenable", n.mutation.reenable);
  s.finish();
}

void read_optimize(Section s, RunConfig& rc) {
  auto& o = rc.optimize;
  std::string mode = "tune";
  s.read("mode", mode);
  if (mode == "tune") {
    o.mode = OptimizeMode::Tune;
  } else if (mode == "evolve") {
    o.mode = OptimizeMode::Evolve;
  } else {
    bad("optimize.mode", "expected tune or evolve");
  }
  std::string search = "grid";
  s.read("search", search);
  if (search == "grid") {
    o.tune.mode = evolution::TuneMode::Grid;
  } else if (search == "genetic") {
    o.tune.mode = evolution::TuneMode::Genetic;
  } else {
    bad("optimize.search", "expected grid or genetic");
  }
  std::size_t threads = 1;
  s.read("threads", threads);
  o.tune.threads = threads;
  o.evolve.neat.threads = threads;
  if (s.has("space")) {
    const json& space = s.raw("space");
    if (!space.is_object()) bad("optimize.space", "expected an object of parameter ranges");
    for (const auto& [name, v] : space.items()) {
      const std::string where = "optimize.space." + name;
      if (v.is_array()) {
        o.space.ranges.push_back({name, read_numbers(v, where)});
      } else {
        Section r(v, where);
        double from = 0, to = 0, step = 1;
        r.read("from", from);
        r.read("to", to);
        r.read("step", step);
        r.finish();
        o.space.ranges.push_back(evolution::ParamRange::stepped(name, from, to, step));
      }
    }
  }
  if (s.has("genetic")) {
    auto g = s.sub("genetic");
    auto& ga = o.tune.genetic;
    g.read("population", ga.population);
    g.read("generations", ga.generations);
    g.read("crossover_rate", ga.crossover_rate);
    g.read("mutation_rate", ga.mutation_rate);
    g.read("tournament", ga.tournament);
    g.finish();
  }
  if (s.has("neat")) read_neat(s.sub("neat"), o.evolve.neat);
  if (s.has("inputs")) o.inputs = read_specs(s.raw("inputs"), "optimize.inputs");
  s.read("penalty_fitness", o.evolve.penalty_fitness);
  s.finish();
}

}  // namespace

json read_config_json(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, path.string() + ": " + e.what());
  }
}

void apply_override(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::InvalidConfig, "override '" + assignment + "' is not key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &config;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (part.empty()) throw Error(ErrorCode::InvalidConfig, "bad override key '" + key + "'");
    if (!node->is_object()) {
      if (!node->is_null()) throw Error(ErrorCode::InvalidConfig, "'" + key + "' crosses a non-object");
      *node = json::object();
    }
    node = &(*node)[part];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = std::move(value);
}

RunConfig parse_run_config(const json& config, const fs::path& base_dir) {
  RunConfig rc;
  Section top(config, "");
  top.read("seed", rc.seed);
  std::string out = rc.output.string();
  top.read("output", out);
  rc.output = base_dir / out;

  if (top.has("data")) {
    auto d = top.sub("data");
    d.read_path("warehouse", rc.data.warehouse, base_dir);
    d.read_path("csv", rc.data.csv, base_dir);
    d.read("symbol", rc.data.symbol);
    d.read("interval", rc.data.interval);
    d.read("from", rc.data.from);
    d.read("to", rc.data.to);
    d.read_path("pair_csv", rc.data.pair_csv, base_dir);
    d.finish();
    if (rc.data.interval <= 0) bad("data.interval", "must be positive");
    if (rc.data.symbol.empty()) bad("data.symbol", "required");
    if (rc.data.warehouse.empty() == rc.data.csv.empty()) {
      bad("data", "set exactly one of warehouse and csv");
    }
  }
  if (top.has("strategy")) {
    if (top.raw("strategy").is_string()) {
      // A strategy file such as the best_strategy.json written by evolve.
      const fs::path file = base_dir / top.raw("strategy").get<std::string>();
      const json loaded = read_config_json(file);
      read_strategy(Section(loaded, "strategy"), rc.strategy, file.parent_path());
    } else {
      read_strategy(top.sub("strategy"), rc.strategy, base_dir);
    }
  }
  if (top.has("costs")) {
    auto c = top.sub("costs");
    c.read("initial_cash", rc.backtest.initial_cash);
    c.read("fee_rate", rc.backtest.costs.fee_rate);
    c.read("slippage_bps", rc.backtest.costs.slippage_bps);
    c.read("margin", rc.backtest.margin);
    c.read("lambda", rc.backtest.lambda);
    c.finish();
  }
  rc.backtest.costs.validate();
  if (!std::isfinite(rc.backtest.initial_cash) || rc.backtest.initial_cash <= 0.0) {
    bad("costs.initial_cash", "must be positive");
  }
  if (!std::isfinite(rc.backtest.lambda) || rc.backtest.lambda < 0.0) {
    bad("costs.lambda", "must be non-negative");
  }
  if (top.has("optimize")) read_optimize(top.sub("optimize"), rc);
  top.finish();

  auto& o = rc.optimize;
  o.tune.backtest = rc.backtest;
  o.tune.genetic.seed = rc.seed;
  o.evolve.backtest = rc.backtest;
  o.evolve.neat.seed = rc.seed;
  o.evolve.stops = rc.strategy.stops;
  o.evolve.fraction = rc.strategy.fraction;
  if (o.inputs.empty()) o.inputs = rc.strategy.indicators;
  o.evolve.neat.validate();
  return rc;
}

json strategy_to_json(const strategy::StrategyConfig& c, const std::string& genome_file) {
  json j;
  j["kind"] = strategy::to_string(c.kind);
  j["fraction"] = c.fraction;
  json specs = json::array();
  for (const auto& s : c.indicators) specs.push_back(indicators::to_string(s));
  j["indicators"] = specs;
  j["stops"] = {{"enabled", c.stops.enabled}, {"atr_period", c.stops.atr_period},
                {"sl_atr", c.stops.sl_atr},   {"tp_atr", c.stops.tp_atr},
                {"sl_pct", c.stops.sl_pct},   {"tp_pct", c.stops.tp_pct}};
  switch (c.kind) {
    case strategy::StrategyKind::EmaCross:
      j["ema"] = {{"p_short", c.ema.p_short}, {"p_long", c.ema.p_long}};
      break;
    case strategy::StrategyKind::Grid:
      j["grid"] = {{"spacing", c.grid.spacing}, {"levels", c.grid.levels}};
      break;
    case strategy::StrategyKind::Pairs:
      j["pairs"] = {{"symbol", c.pair_symbol}, {"lookback", c.pairs.lookback},
                    {"z_in", c.pairs.z_in},     {"z_out", c.pairs.z_out}};
      break;
    case strategy::StrategyKind::NeatNetwork:
      j["genome"] = genome_file;
      j["normalizer"] = {{"mean", c.neat.normalizer.mean}, {"std", c.neat.normalizer.std}};
      break;
    case strategy::StrategyKind::None:
      break;
  }
  return j;
}

}  // namespace cogtrade::core
