#include "cogtrade/backtest/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "cogtrade/error.hpp"
#include "cogtrade/file_io.hpp"
#include "cogtrade/number_format.hpp"

namespace cogtrade::backtest {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json fill_json(const Fill& f) {
  return json{{"order_id", f.order_id}, {"bar", f.bar},         {"timestamp", f.timestamp},
              {"side", strategy::to_string(f.side)},            {"price", f.price},
              {"quantity", f.quantity}, {"fee", f.fee},         {"lot_id", f.lot_id},
              {"reason", f.reason},     {"forced", f.forced}};
}

}  // namespace

std::string report_json(const BacktestReport& r) {
  json j;
  j["strategy"] = r.strategy;
  j["symbol"] = r.symbol;
  j["initial_cash"] = r.initial_cash;
  j["final_equity"] = r.equity.empty() ? r.initial_cash : r.equity.back().equity;
  j["bars"] = r.equity.size();
  j["fees_paid"] = r.fees_paid;
  j["metrics"] = {{"net_profit_pct", r.metrics.net_profit_pct},
                  {"max_drawdown_pct", r.metrics.max_drawdown_pct},
                  {"win_rate", r.metrics.win_rate},
                  {"trade_count", r.metrics.trade_count}};
  j["lambda"] = r.lambda;
  j["score"] = r.score;
  j["forced_close"] = r.forced_close;
  j["interrupted"] = r.interrupted;
  j["dropped_intents"] = r.dropped_intents;
  j["fill_count"] = r.fills.size();
  json trades = json::array();
  for (const auto& t : r.trades) {
    trades.push_back({{"symbol", t.symbol},
                      {"direction", t.is_long ? "long" : "short"},
                      {"entry", fill_json(t.entry)},
                      {"exit", fill_json(t.exit)},
                      {"pnl", t.pnl},
                      {"profit_pct", t.profit_pct},
                      {"forced", t.forced}});
  }
  j["trades"] = std::move(trades);
  json rejected = json::array();
  for (const auto& o : r.orders) {
    if (o.status != OrderStatus::Rejected) continue;
    rejected.push_back({{"order_id", o.id},
                        {"bar", o.created_at_bar},
                        {"side", strategy::to_string(o.intent.side)},
                        {"symbol", o.intent.symbol},
                        {"reason", o.intent.reason},
                        {"rejected_because", o.reject_reason ? to_string(*o.reject_reason) : ""}});
  }
  j["rejected"] = std::move(rejected);
  json open = json::array();
  for (const auto& l : r.open_lots) {
    open.push_back({{"lot_id", l.id},
                    {"symbol", l.symbol},
                    {"quantity", l.quantity},
                    {"entry_price", l.entry_price},
                    {"entry_bar", l.entry_bar}});
  }
  j["open_lots"] = std::move(open);
  return j.dump(2) + "\n";
}

std::string equity_csv(const BacktestReport& r) {
  std::ostringstream out;
  out << "timestamp,equity,cash\n";
  for (const auto& p : r.equity) {
    out << p.timestamp << ',' << format_double(p.equity) << ',' << format_double(p.cash) << '\n';
  }
  return out.str();
}

std::string signals_csv(const BacktestReport& r) {
  std::ostringstream out;
  out << "bar,timestamp,symbol,side,reason,close\n";
  for (const auto& s : r.signals) {
    out << s.bar << ',' << s.timestamp << ',' << s.symbol << ',' << strategy::to_string(s.side)
        << ',' << s.reason << ',' << format_double(s.close) << '\n';
  }
  return out.str();
}

void write_report(const BacktestReport& report, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  write_file_atomically(dir / kReportFile, report_json(report));
  write_file_atomically(dir / kEquityFile, equity_csv(report));
  write_file_atomically(dir / kSignalsFile, signals_csv(report));
}

ReportSummary read_report_summary(const fs::path& dir) {
  const auto path = dir / kReportFile;
  if (!fs::exists(path)) throw Error(ErrorCode::MissingReport, "no report at " + path.string());
  try {
    const auto j = json::parse(read_file(path));
    ReportSummary s;
    s.strategy = j.at("strategy").get<std::string>();
    s.symbol = j.at("symbol").get<std::string>();
    const auto& m = j.at("metrics");
    s.metrics.net_profit_pct = m.at("net_profit_pct").get<double>();
    s.metrics.max_drawdown_pct = m.at("max_drawdown_pct").get<double>();
    s.metrics.win_rate = m.at("win_rate").get<double>();
    s.metrics.trade_count = m.at("trade_count").get<std::size_t>();
    s.score = j.at("score").get<double>();
    s.lambda = j.at("lambda").get<double>();
    s.initial_cash = j.at("initial_cash").get<double>();
    s.final_equity = j.at("final_equity").get<double>();
    s.forced_close = j.at("forced_close").get<bool>();
    s.interrupted = j.at("interrupted").get<bool>();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::IoError, "malformed report " + path.string() + ": " + e.what());
  }
}

}  // namespace cogtrade::backtest
