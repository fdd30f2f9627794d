#include "cogtrade/core/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cogtrade/backtest/report_io.hpp"
#include "cogtrade/broker/paper_trade.hpp"
#include "cogtrade/error.hpp"
#include "cogtrade/file_io.hpp"
#include "cogtrade/indicators/indicators.hpp"
#include "cogtrade/market_data/csv.hpp"
#include "cogtrade/market_data/transform.hpp"
#include "cogtrade/market_data/warehouse.hpp"
#include "cogtrade/neat/genome_io.hpp"
#include "cogtrade/number_format.hpp"

namespace cogtrade::core {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

std::string fmt(double v) { return format_double(v); }

market_data::CandleSeries load_one(const DataSection& d, const std::string& symbol,
                                   const fs::path& csv) {
  market_data::CandleSeries s =
      csv.empty() ? market_data::Warehouse(d.warehouse).load(symbol, d.interval)
                  : market_data::parse_csv(csv, symbol, d.interval);
  if (d.from || d.to) {
    s = market_data::slice_window(s, d.from.value_or(s.front().timestamp),
                                  d.to.value_or(s.back().timestamp));
  }
  return s;
}

void print_metrics(std::ostream& log, const backtest::BacktestReport& r) {
  log << "strategy " << r.strategy << " on " << r.symbol << ": " << r.equity.size() << " bars, "
      << r.trades.size() << " trades\n"
      << "net profit " << fmt(r.metrics.net_profit_pct) << "%, max drawdown "
      << fmt(r.metrics.max_drawdown_pct) << "%, win rate " << fmt(r.metrics.win_rate)
      << ", score " << fmt(r.score) << '\n';
}

std::string column_csv(const std::vector<std::int64_t>& ts, const std::vector<std::string>& names,
                       const std::vector<indicators::IndicatorOutput>& cols) {
  std::ostringstream out;
  out << "timestamp";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << ts[i];
    for (const auto& c : cols) {
      out << ',';
      if (c.defined(i)) out << fmt(c[i]);
    }
    out << '\n';
  }
  return out.str();
}

void indicator_columns(const std::vector<indicators::IndicatorSpec>& specs,
                       const market_data::CandleSeries& s, std::vector<std::string>& names,
                       std::vector<indicators::IndicatorOutput>& cols) {
  for (const auto& spec : specs) {
    const auto n = indicators::line_names(spec);
    names.insert(names.end(), n.begin(), n.end());
    auto c = indicators::compute(spec, s);
    cols.insert(cols.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
}

std::vector<std::int64_t> timestamps(const market_data::CandleSeries& s) {
  std::vector<std::int64_t> ts;
  for (const auto& c : s) ts.push_back(c.timestamp);
  return ts;
}

}  // namespace

market_data::DatasetMeta cmd_ingest(const IngestOptions& o, std::ostream& log) {
  if (o.symbol.empty()) throw Error(ErrorCode::InvalidConfig, "ingest needs a symbol");
  if (o.warehouse.empty()) throw Error(ErrorCode::InvalidConfig, "ingest needs a warehouse directory");
  if (!fs::exists(o.input)) throw Error(ErrorCode::IoError, "no such file " + o.input.string());
  const auto series = market_data::parse_csv(o.input, o.symbol, o.interval, {o.allow_gaps});
  const auto meta = market_data::Warehouse(o.warehouse).store(series, o.input.filename().string());
  log << "stored " << meta.bar_count << " bars of " << meta.symbol << " at " << meta.interval
      << "s in " << o.warehouse.string() << '\n';
  return meta;
}

std::vector<market_data::CandleSeries> load_data(const RunConfig& rc) {
  const auto& d = rc.data;
  if (d.symbol.empty()) throw Error(ErrorCode::InvalidConfig, "config has no data section");
  std::vector<market_data::CandleSeries> out;
  out.push_back(load_one(d, d.symbol, d.csv));
  if (rc.strategy.kind == strategy::StrategyKind::Pairs) {
    if (!d.csv.empty() && d.pair_csv.empty()) {
      throw Error(ErrorCode::InvalidConfig, "data.pair_csv is required for pairs with csv input");
    }
    out.push_back(load_one(d, rc.strategy.pair_symbol, d.pair_csv));
  }
  return out;
}

void cmd_indicator(const RunConfig& rc, std::vector<indicators::IndicatorSpec> specs,
                   std::ostream& log) {
  if (specs.empty()) specs = rc.strategy.indicators;
  if (specs.empty()) throw Error(ErrorCode::InvalidConfig, "no indicators requested");
  const auto data = load_data(rc);
  std::vector<std::string> names;
  std::vector<indicators::IndicatorOutput> cols;
  indicator_columns(specs, data.front(), names, cols);
  ensure_dir(rc.output);
  write_file_atomically(rc.output / kIndicatorsFile, column_csv(timestamps(data.front()), names, cols));
  log << "wrote " << names.size() << " columns for " << data.front().size() << " bars to "
      << (rc.output / kIndicatorsFile).string() << '\n';
}

backtest::BacktestReport cmd_backtest(const RunConfig& rc, std::ostream& log) {
  const auto data = load_data(rc);
  std::vector<const market_data::CandleSeries*> ptrs;
  for (const auto& s : data) ptrs.push_back(&s);
  auto report = backtest::run_backtest(rc.strategy, ptrs, rc.backtest);
  backtest::write_report(report, rc.output);
  print_metrics(log, report);
  return report;
}

void cmd_paper(const RunConfig& rc, std::ostream& log) {
  const auto validated = cmd_backtest(rc, log);
  broker::SimulatedExchange exchange(load_data(rc));
  const auto session = broker::paper_trade_loop(rc.strategy, exchange, rc.backtest);
  backtest::write_report(session.report, rc.output / kSessionDir);
  log << "paper session: " << session.orders_sent << " orders, final equity "
      << fmt(session.report.equity.back().equity) << " (backtest "
      << fmt(validated.equity.back().equity) << ")\n";
}

void cmd_optimize(const RunConfig& rc, std::ostream& log) {
  const auto data = load_data(rc);
  ensure_dir(rc.output);
  if (rc.optimize.mode == OptimizeMode::Tune) {
    std::vector<const market_data::CandleSeries*> ptrs;
    for (const auto& s : data) ptrs.push_back(&s);
    const auto result = evolution::tune_parameters(rc.strategy, rc.optimize.space, ptrs, rc.optimize.tune);
    write_file_atomically(rc.output / kLeaderboardFile, evolution::leaderboard_csv(result));
    json best;
    json params = json::object();
    for (const auto& [name, v] : result.best) params[name] = v;
    best["params"] = params;
    best["score"] = result.best_score;
    best["evaluated"] = result.leaderboard.size();
    best["strategy"] = strategy_to_json(result.best_config);
    write_file_atomically(rc.output / kBestParamsFile, best.dump(2) + "\n");
    log << "evaluated " << result.leaderboard.size() << " candidates, best score "
        << fmt(result.best_score) << " with";
    for (const auto& [name, v] : result.best) log << ' ' << name << '=' << fmt(v);
    log << '\n';
    return;
  }
  const auto out = evolution::evolve_strategy(data.front(), rc.optimize.inputs, rc.optimize.evolve);
  std::ostringstream hist;
  hist << "generation,best,mean,species\n";
  for (const auto& g : out.result.history) {
    hist << g.generation << ',' << fmt(g.best) << ',' << fmt(g.mean) << ',' << g.species << '\n';
  }
  write_file_atomically(rc.output / kHistoryFile, hist.str());
  write_file_atomically(rc.output / kBestGenomeFile, neat::genome_to_text(out.result.best));
  write_file_atomically(rc.output / kBestStrategyFile,
                        strategy_to_json(out.best_config, kBestGenomeFile).dump(2) + "\n");
  log << "evolved " << out.result.history.size() << " generations, best fitness "
      << fmt(*out.result.best.fitness) << (out.result.reached_threshold ? " (threshold reached)" : "")
      << '\n';
}

void cmd_report(const fs::path& report_dir, const RunConfig& rc, const fs::path& out_dir,
                std::ostream& log) {
  const auto summary = backtest::read_report_summary(report_dir);
  json report;
  try {
    report = json::parse(read_file(report_dir / backtest::kReportFile));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("malformed report: ") + e.what());
  }
  const auto data = load_data(rc);
  const auto& s = data.front();
  if (s.symbol() != summary.symbol) {
    throw Error(ErrorCode::InvalidConfig,
                "report is for " + summary.symbol + " but the config loads " + s.symbol());
  }
  ensure_dir(out_dir);

  std::ostringstream candles;
  candles << "timestamp,open,high,low,close,volume\n";
  for (const auto& c : s) {
    candles << c.timestamp << ',' << fmt(c.open) << ',' << fmt(c.high) << ',' << fmt(c.low) << ','
            << fmt(c.close) << ',' << fmt(c.volume) << '\n';
  }
  write_file_atomically(out_dir / kCandlesFile, candles.str());

  std::vector<std::string> names;
  std::vector<indicators::IndicatorOutput> cols;
  indicator_columns(rc.strategy.indicators, s, names, cols);
  write_file_atomically(out_dir / kOverlaysFile, column_csv(timestamps(s), names, cols));

  struct Marker {
    std::size_t bar;
    std::int64_t timestamp;
    std::string symbol, action, reason;
    double price;
  };
  std::vector<Marker> markers;
  try {
    for (const auto& t : report.at("trades")) {
      const bool is_long = t.at("direction").get<std::string>() == "long";
      const auto sym = t.at("symbol").get<std::string>();
      for (const char* leg : {"entry", "exit"}) {
        const auto& f = t.at(leg);
        const bool buy = (leg == std::string("entry")) == is_long;
        markers.push_back({f.at("bar").get<std::size_t>(), f.at("timestamp").get<std::int64_t>(), sym,
                           buy ? "buy" : "sell", f.at("reason").get<std::string>(),
                           f.at("price").get<double>()});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::IoError, std::string("malformed trades in report: ") + e.what());
  }
  std::stable_sort(markers.begin(), markers.end(),
                   [](const Marker& a, const Marker& b) { return a.bar < b.bar; });
  std::ostringstream mk;
  mk << "bar,timestamp,symbol,action,price,reason\n";
  for (const auto& m : markers) {
    mk << m.bar << ',' << m.timestamp << ',' << m.symbol << ',' << m.action << ',' << fmt(m.price)
       << ',' << m.reason << '\n';
  }
  write_file_atomically(out_dir / kMarkersFile, mk.str());
  log << "wrote chart data (" << s.size() << " candles, " << names.size() << " overlay lines, "
      << markers.size() << " markers) to " << out_dir.string() << '\n';
}

}  // namespace cogtrade::core
