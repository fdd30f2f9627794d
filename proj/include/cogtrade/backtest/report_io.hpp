#pragma once

#include <filesystem>
#include <string>

#include "cogtrade/backtest/backtester.hpp"

namespace cogtrade::backtest {

inline constexpr const char* kReportFile = "report.json";
inline constexpr const char* kEquityFile = "equity.csv";
inline constexpr const char* kSignalsFile = "signals.csv";

/// Metrics, trades, rejected orders and flags as pretty-printed JSON.
std::string report_json(const BacktestReport& report);
/// timestamp,equity,cash
std::string equity_csv(const BacktestReport& report);
/// bar,timestamp,symbol,side,reason,close
std::string signals_csv(const BacktestReport& report);

/// Writes the three files into `dir`, creating it if needed.
void write_report(const BacktestReport& report, const std::filesystem::path& dir);

struct ReportSummary {
  std::string strategy;
  std::string symbol;
  Metrics metrics;
  double score = 0.0;
  double lambda = 0.0;
  double initial_cash = 0.0;
  double final_equity = 0.0;
  bool forced_close = false;
  bool interrupted = false;
};

/// Reads `dir`/report.json. Throws MissingReport when absent, IoError when
/// unreadable or malformed.
ReportSummary read_report_summary(const std::filesystem::path& dir);

}  // namespace cogtrade::backtest
