#include "cogtrade/broker/paper_trade.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/backtest/pipeline.hpp"
#include "cogtrade/error.hpp"

namespace cogtrade::broker {

using backtest::Account;
using backtest::Fill;
using backtest::OrderStatus;
using backtest::PlannedFill;
using backtest::RejectReason;

PaperSession paper_trade_loop(const strategy::StrategyConfig& config, SimulatedExchange& exchange,
                              const backtest::BacktestSettings& settings,
                              const PaperTradeOptions& options) {
  config.validate();
  return paper_trade_loop(nullptr, config, exchange, settings, options);
}

PaperSession paper_trade_loop(std::unique_ptr<strategy::Strategy> custom,
                              const strategy::StrategyConfig& config, SimulatedExchange& exchange,
                              const backtest::BacktestSettings& settings,
                              const PaperTradeOptions& options) {
  const bool margin = settings.margin_for(config);
  exchange.init({settings.initial_cash, settings.costs, margin});
  const auto& feeds = exchange.feeds();
  std::vector<const market_data::CandleSeries*> series;
  for (const auto& sym : config.symbols(feeds.front().symbol())) {
    auto it = std::find_if(feeds.begin(), feeds.end(),
                           [&](const market_data::CandleSeries& s) { return s.symbol() == sym; });
    if (it == feeds.end()) throw Error(ErrorCode::UnknownSymbol, "no feed for symbol " + sym);
    series.push_back(&*it);
  }
  const std::size_t total = exchange.length();
  const std::size_t processed = std::min(total, options.interrupt_after.value_or(total));
  const bool complete = processed == total;

  Account account(settings.initial_cash, margin);
  backtest::DecisionPipeline pipeline(config, std::move(custom));
  PaperSession session;
  auto& report = session.report;
  report.strategy = std::string(strategy::to_string(config.kind));
  report.symbol = series.front()->symbol();
  report.initial_cash = settings.initial_cash;
  std::vector<std::size_t> pending;
  std::uint64_t next_order = 1;

  auto close_of = [&](const std::string& symbol, std::size_t t) {
    for (const auto* s : series) {
      if (s->symbol() == symbol) return (*s)[t].close;
    }
    throw Error(ErrorCode::UnknownSymbol, "no feed for symbol " + symbol);
  };
  // Sends one planned fill and books whatever the exchange reports.
  auto route = [&](const PlannedFill& p, std::uint64_t order_id, std::size_t t, bool forced) {
    OrderRequest req;
    req.client_id = "o" + std::to_string(order_id) + "-" +
                    std::to_string(p.close_lot.value_or(0)) + (forced ? "-eod" : "");
    req.symbol = p.symbol;
    req.side = backtest::is_buy(p.side) ? OrderSide::Buy : OrderSide::Sell;
    req.quantity = p.quantity;
    ++session.orders_sent;
    const auto ack = exchange.place_order(req);
    if (ack.status != AckStatus::Accepted) return false;
    Fill f;
    f.order_id = order_id;
    f.bar = t;
    f.timestamp = (*series.front())[t].timestamp;
    f.symbol = p.symbol;
    f.side = p.side;
    f.price = ack.fill->price;
    f.quantity = ack.fill->quantity;
    f.fee = ack.fill->fee;
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
    return true;
  };

  for (std::size_t t = 0; t < processed; ++t) {
    exchange.advance(t, PricePhase::Open);
    if (!pending.empty()) {
      const double snapshot = account.cash();
      std::stable_partition(pending.begin(), pending.end(), [&](std::size_t i) {
        return !strategy::is_open(report.orders[i].intent.side);
      });
      for (std::size_t i : pending) {
        auto& order = report.orders[i];
        double reference = 0.0;
        try {
          reference = exchange.symbol_info(order.intent.symbol).price;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::UnknownSymbol) throw;
          order.status = OrderStatus::Rejected;
          order.reject_reason = RejectReason::UnknownSymbol;
          continue;
        }
        const auto res =
            backtest::resolve_intent(account, order.intent, reference, snapshot, settings.costs);
        if (res.rejected) {
          order.status = OrderStatus::Rejected;
          order.reject_reason = res.rejected;
          continue;
        }
        bool all_filled = true;
        for (const auto& p : res.fills) all_filled = route(p, order.id, t, false) && all_filled;
        order.status = all_filled ? OrderStatus::Filled : OrderStatus::Rejected;
        if (!all_filled) order.reject_reason = RejectReason::InsufficientFunds;
      }
      pending.clear();
    }
    exchange.advance(t, PricePhase::Close);

    std::vector<strategy::MarketHistory::Entry> entries;
    for (const auto* s : series) entries.push_back({s->symbol(), s->candles().first(t + 1)});
    const strategy::MarketHistory history(std::move(entries));
    auto decision = pipeline.decide(history, account.lots());
    for (const auto& intent : decision.intents) {
      double close = 0.0;
      try {
        close = close_of(intent.symbol, t);
      } catch (const Error&) {
      }
      report.signals.push_back({t, (*series.front())[t].timestamp, intent.symbol, intent.side,
                                intent.reason, close});
    }

    if (t + 1 < processed) {
      for (auto& intent : decision.intents) {
        pending.push_back(report.orders.size());
        report.orders.push_back({next_order++, std::move(intent), t, OrderStatus::Pending, {}});
      }
    } else {
      report.dropped_intents = decision.intents.size();
      if (complete) {
        const auto lots = account.lots();
        for (const auto& lot : lots) {
          const bool buy_back = !lot.is_long();
          const double price =
              backtest::execution_price(close_of(lot.symbol, t), buy_back, settings.costs);
          const double q = std::abs(lot.quantity);
          route({lot.is_long() ? strategy::Side::CloseLong : strategy::Side::CloseShort, lot.symbol,
                 price, q, backtest::fee_amount(price, q, settings.costs), lot.id, "end-of-data",
                 lot.tag},
                0, t, true);
          report.forced_close = true;
        }
      } else {
        report.interrupted = true;
        report.open_lots = account.lots();
      }
    }
    const double equity =
        account.equity([&](const std::string& sym) { return close_of(sym, t); });
    report.equity.push_back({(*series.front())[t].timestamp, equity, account.cash()});
  }
  report.fees_paid = account.fees_paid();
  backtest::finalize_report(report, settings.lambda);
  session.exchange_account = exchange.close_session();
  return session;
}

}  // namespace cogtrade::broker
