#include "cogtrade/backtest/backtester.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/backtest/pipeline.hpp"
#include "cogtrade/error.hpp"

namespace cogtrade::backtest {

std::string to_string(OrderStatus status) {
  switch (status) {
    case OrderStatus::Pending: return "Pending";
    case OrderStatus::Filled: return "Filled";
    case OrderStatus::Rejected: return "Rejected";
  }
  return "?";
}

namespace {

std::vector<const CandleSeries*> select_series(const strategy::StrategyConfig& config,
                                               const std::vector<const CandleSeries*>& data) {
  if (data.empty() || data.front()->empty()) {
    throw Error(ErrorCode::InvalidParameter, "backtest needs a non-empty primary series");
  }
  std::vector<const CandleSeries*> out;
  for (const auto& sym : config.symbols(data.front()->symbol())) {
    auto it = std::find_if(data.begin(), data.end(),
                           [&](const CandleSeries* s) { return s->symbol() == sym; });
    if (it == data.end()) throw Error(ErrorCode::UnknownSymbol, "no data for symbol " + sym);
    if ((*it)->has_gaps()) throw Error(ErrorCode::GapDetected, sym + " has gaps");
    out.push_back(*it);
  }
  strategy::require_aligned(out);
  return out;
}

}  // namespace

void finalize_report(BacktestReport& report, double lambda) {
  std::vector<double> curve;
  curve.reserve(report.equity.size());
  for (const auto& p : report.equity) curve.push_back(p.equity);
  report.lambda = lambda;
  report.metrics = compute_metrics(curve, report.trades);
  report.score = score(report.metrics, lambda);
}

BacktestReport run_backtest(const strategy::StrategyConfig& config,
                            const std::vector<const CandleSeries*>& data,
                            const BacktestSettings& settings) {
  config.validate();
  return run_backtest(nullptr, config, data, settings);
}

BacktestReport run_backtest(std::unique_ptr<strategy::Strategy> custom,
                            const strategy::StrategyConfig& config,
                            const std::vector<const CandleSeries*>& data,
                            const BacktestSettings& settings) {
  settings.costs.validate();
  if (!std::isfinite(settings.lambda) || settings.lambda < 0.0) {
    throw Error(ErrorCode::InvalidConfig, "lambda must be finite and non-negative");
  }
  const auto series = select_series(config, data);
  const std::size_t n = series.front()->size();
  Account account(settings.initial_cash, settings.margin_for(config));
  DecisionPipeline pipeline(config, std::move(custom));

  BacktestReport report;
  report.strategy = std::string(strategy::to_string(config.kind));
  report.symbol = series.front()->symbol();
  report.initial_cash = settings.initial_cash;
  std::vector<std::size_t> pending;
  std::uint64_t next_order = 1;

  auto bar_of = [&](const std::string& symbol, std::size_t t) -> const market_data::Candle& {
    for (const auto* s : series) {
      if (s->symbol() == symbol) return (*s)[t];
    }
    throw Error(ErrorCode::UnknownSymbol, "no data for symbol " + symbol);
  };
  auto has_symbol = [&](const std::string& symbol) {
    return std::any_of(series.begin(), series.end(),
                       [&](const CandleSeries* s) { return s->symbol() == symbol; });
  };
  auto book = [&](const PlannedFill& p, std::uint64_t order_id, std::size_t t, bool forced) {
    Fill f;
    f.order_id = order_id;
    f.bar = t;
    f.timestamp = (*series.front())[t].timestamp;
    f.symbol = p.symbol;
    f.side = p.side;
    f.price = p.price;
    f.quantity = p.quantity;
    f.fee = p.fee;
    f.reason = p.reason;
    f.tag = p.tag;
    f.forced = forced;
    if (p.close_lot) {
      f.lot_id = *p.close_lot;
      report.trades.push_back(account.close_lot(*p.close_lot, f));
    } else {
      f.lot_id = account.open_lot(f);
    }
    report.fills.push_back(std::move(f));
  };

  for (std::size_t t = 0; t < n; ++t) {
    if (!pending.empty()) {
      const double snapshot = account.cash();
      std::stable_partition(pending.begin(), pending.end(), [&](std::size_t i) {
        return !strategy::is_open(report.orders[i].intent.side);
      });
      for (std::size_t i : pending) {
        auto& order = report.orders[i];
        if (!has_symbol(order.intent.symbol)) {
          order.status = OrderStatus::Rejected;
          order.reject_reason = RejectReason::UnknownSymbol;
          continue;
        }
        const auto res = resolve_intent(account, order.intent, bar_of(order.intent.symbol, t).open,
                                        snapshot, settings.costs);
        if (res.rejected) {
          order.status = OrderStatus::Rejected;
          order.reject_reason = res.rejected;
          continue;
        }
        for (const auto& p : res.fills) book(p, order.id, t, false);
        order.status = OrderStatus::Filled;
      }
      pending.clear();
    }

    std::vector<strategy::MarketHistory::Entry> entries;
    entries.reserve(series.size());
    for (const auto* s : series) entries.push_back({s->symbol(), s->candles().first(t + 1)});
    const strategy::MarketHistory history(std::move(entries));
    auto decision = pipeline.decide(history, account.lots());
    for (const auto& intent : decision.intents) {
      const double close = has_symbol(intent.symbol) ? bar_of(intent.symbol, t).close : 0.0;
      report.signals.push_back({t, (*series.front())[t].timestamp, intent.symbol, intent.side,
                                intent.reason, close});
    }

    if (t + 1 < n) {
      for (auto& intent : decision.intents) {
        pending.push_back(report.orders.size());
        report.orders.push_back({next_order++, std::move(intent), t, OrderStatus::Pending, {}});
      }
    } else {
      report.dropped_intents = decision.intents.size();
      const auto lots = account.lots();
      for (const auto& lot : lots) {
        const bool buy_back = !lot.is_long();
        const double price = execution_price(bar_of(lot.symbol, t).close, buy_back, settings.costs);
        const double q = std::abs(lot.quantity);
        book({lot.is_long() ? strategy::Side::CloseLong : strategy::Side::CloseShort, lot.symbol, price,
              q, fee_amount(price, q, settings.costs), lot.id, "end-of-data", lot.tag},
             0, t, true);
        report.forced_close = true;
      }
    }

    const double equity =
        account.equity([&](const std::string& sym) { return bar_of(sym, t).close; });
    report.equity.push_back({(*series.front())[t].timestamp, equity, account.cash()});
  }
  report.fees_paid = account.fees_paid();
  finalize_report(report, settings.lambda);
  return report;
}

}  // namespace cogtrade::backtest
