#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cogtrade/backtest/backtester.hpp"
#include "cogtrade/evolution/evolve_strategy.hpp"
#include "cogtrade/evolution/tuner.hpp"
#include "cogtrade/market_data/candle.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::core {

/// Where the bars come from: a warehouse (symbol + interval) or a CSV file.
/// Timestamps in `from`/`to` are inclusive milliseconds.
struct DataSection {
  std::filesystem::path warehouse;
  std::filesystem::path csv;
  std::string symbol;
  std::int64_t interval = 60;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  /// Second leg for pairs, read from the same warehouse or its own CSV.
  std::filesystem::path pair_csv;
};

enum class OptimizeMode { Tune, Evolve };

struct OptimizeSection {
  OptimizeMode mode = OptimizeMode::Tune;
  evolution::SearchSpace space;
  evolution::TuneSettings tune;
  evolution::EvolveSettings evolve;
  /// Network inputs for evolve; defaults to the strategy's indicators.
  std::vector<indicators::IndicatorSpec> inputs;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::filesystem::path output = "out";
  DataSection data;
  strategy::StrategyConfig strategy;
  backtest::BacktestSettings backtest;
  OptimizeSection optimize;
};

/// Reads a JSON config file. Throws IoError / InvalidConfig.
nlohmann::ordered_json read_config_json(const std::filesystem::path& path);

/// `key.path=value`: value is taken as JSON when it parses, else as a string.
/// Missing objects along the path are created. Throws InvalidConfig.
void apply_override(nlohmann::ordered_json& config, const std::string& assignment);

/// Builds and validates every section. Relative paths resolve against
/// `base_dir`. Unknown keys are rejected. Throws InvalidConfig and the
/// validation errors of the sections.
RunConfig parse_run_config(const nlohmann::ordered_json& config, const std::filesystem::path& base_dir);

/// The `strategy` section as JSON. A network genome is referenced through
/// `genome_file`, which the caller writes.
nlohmann::ordered_json strategy_to_json(const strategy::StrategyConfig& config,
                                        const std::string& genome_file = {});

}  // namespace cogtrade::core
