#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cogtrade/core/run_config.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::core {

inline constexpr const char* kIndicatorsFile = "indicators.csv";
inline constexpr const char* kLeaderboardFile = "leaderboard.csv";
inline constexpr const char* kBestParamsFile = "best_params.json";
inline constexpr const char* kHistoryFile = "fitness_history.csv";
inline constexpr const char* kBestGenomeFile = "best_genome.txt";
inline constexpr const char* kBestStrategyFile = "best_strategy.json";
inline constexpr const char* kCandlesFile = "candles.csv";
inline constexpr const char* kOverlaysFile = "overlays.csv";
inline constexpr const char* kMarkersFile = "markers.csv";
inline constexpr const char* kSessionDir = "paper";

struct IngestOptions {
  std::filesystem::path input;
  std::string symbol;
  std::int64_t interval = 60;
  std::filesystem::path warehouse;
  bool allow_gaps = false;
};

/// Parses and validates a CSV, then stores it in the warehouse. Nothing is
/// written when parsing fails.
market_data::DatasetMeta cmd_ingest(const IngestOptions& options, std::ostream& log);

/// The primary series first, then the pairs leg when the strategy needs one.
std::vector<market_data::CandleSeries> load_data(const RunConfig& config);

/// One column per output line of `specs` (the strategy's indicators when
/// empty), written to <output>/indicators.csv.
void cmd_indicator(const RunConfig& config, std::vector<indicators::IndicatorSpec> specs,
                   std::ostream& log);

/// Writes report.json, equity.csv and signals.csv to <output>.
backtest::BacktestReport cmd_backtest(const RunConfig& config, std::ostream& log);

/// Backtests, then replays the same data through the simulated exchange.
/// The session report goes to <output>/paper.
void cmd_paper(const RunConfig& config, std::ostream& log);

/// tune: leaderboard.csv + best_params.json; evolve: fitness_history.csv,
/// best_genome.txt and best_strategy.json.
void cmd_optimize(const RunConfig& config, std::ostream& log);

/// Chart data for a report directory: candles.csv, overlays.csv (the
/// strategy's indicator lines) and markers.csv (one row per trade entry and
/// exit), written to `out_dir`. Throws MissingReport.
void cmd_report(const std::filesystem::path& report_dir, const RunConfig& config,
                const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace cogtrade::core
