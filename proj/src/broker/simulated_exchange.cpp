#include "cogtrade/broker/simulated_exchange.hpp"

#include <cmath>

#include "cogtrade/error.hpp"
#include "cogtrade/strategy/history.hpp"

namespace cogtrade::broker {

namespace {

OrderAck reject(const OrderRequest& req, std::string broker_id, std::string why) {
  OrderAck ack;
  ack.client_id = req.client_id;
  ack.broker_id = std::move(broker_id);
  ack.status = AckStatus::Rejected;
  ack.reject_reason = std::move(why);
  return ack;
}

}  // namespace

SimulatedExchange::SimulatedExchange(std::vector<market_data::CandleSeries> feeds)
    : feeds_(std::move(feeds)) {
  std::vector<const market_data::CandleSeries*> ptrs;
  for (const auto& f : feeds_) ptrs.push_back(&f);
  strategy::require_aligned(ptrs);
  if (feeds_.front().empty()) throw Error(ErrorCode::InvalidParameter, "empty feed");
}

std::size_t SimulatedExchange::length() const { return feeds_.front().size(); }

void SimulatedExchange::init(const SessionConfig& config) {
  config.costs.validate();
  if (!std::isfinite(config.initial_cash) || config.initial_cash <= 0.0) {
    throw Error(ErrorCode::InvalidConfig, "initial cash must be positive");
  }
  config_ = config;
  initialized_ = true;
  closed_ = false;
  bar_ = 0;
  phase_ = PricePhase::Open;
  cash_ = config.initial_cash;
  fees_ = 0.0;
  positions_.clear();
  acks_.clear();
  next_broker_id_ = 1;
}

void SimulatedExchange::advance(std::size_t bar, PricePhase phase) {
  if (bar >= length()) throw Error(ErrorCode::InvalidParameter, "cursor past the end of the feed");
  if (bar < bar_ || (bar == bar_ && phase < phase_)) {
    throw Error(ErrorCode::InvalidParameter, "the replay cursor only moves forward");
  }
  bar_ = bar;
  phase_ = phase;
}

const market_data::CandleSeries& SimulatedExchange::feed(const std::string& symbol) const {
  for (const auto& f : feeds_) {
    if (f.symbol() == symbol) return f;
  }
  throw Error(ErrorCode::UnknownSymbol, "exchange has no feed for " + symbol);
}

double SimulatedExchange::reference_price(const std::string& symbol) const {
  const auto& c = feed(symbol)[bar_];
  return phase_ == PricePhase::Open ? c.open : c.close;
}

SymbolInfo SimulatedExchange::symbol_info(const std::string& symbol) const {
  const auto& f = feed(symbol);
  return {f.symbol(), f.interval(), bar_, reference_price(symbol)};
}

OrderAck SimulatedExchange::place_order(const OrderRequest& req) {
  if (!initialized_ || closed_) throw Error(ErrorCode::InvalidConfig, "session is not open");
  if (auto it = acks_.find(req.client_id); it != acks_.end()) return it->second;
  const std::string broker_id = "sim-" + std::to_string(next_broker_id_++);
  auto remember = [&](OrderAck ack) {
    acks_.emplace(req.client_id, ack);
    return ack;
  };
  if (req.client_id.empty()) return remember(reject(req, broker_id, "MissingClientId"));
  const double ref = reference_price(req.symbol);
  const bool buy = req.side == OrderSide::Buy;
  const double price = backtest::execution_price(ref, buy, config_.costs);
  double qty = req.quantity;
  if (req.quote_amount) {
    const double fee_factor = buy ? 1.0 + config_.costs.fee_rate : 1.0 - config_.costs.fee_rate;
    qty = *req.quote_amount / (price * fee_factor);
  }
  if (!std::isfinite(qty) || qty <= 0.0) return remember(reject(req, broker_id, "InvalidQuantity"));
  const double fee = backtest::fee_amount(price, qty, config_.costs);
  const auto held = positions_.find(req.symbol);
  const double before = held == positions_.end() ? 0.0 : held->second;
  if (!config_.margin) {
    if (buy && price * qty + fee > cash_) {
      return remember(reject(req, broker_id, "InsufficientFunds"));
    }
    if (!buy && qty > before * (1.0 + 1e-9)) {
      return remember(reject(req, broker_id, "InsufficientPosition"));
    }
  }
  const double notional = price * qty;
  double pos = before;
  if (buy) {
    cash_ -= notional + fee;
    pos += qty;
  } else {
    cash_ += notional - fee;
    pos -= qty;
  }
  // Lots opened separately and closed separately need not sum back to an
  // exact zero.
  if (std::abs(pos) <= 1e-12 * std::max(qty, std::abs(before))) pos = 0.0;
  if (pos == 0.0) {
    positions_.erase(req.symbol);
  } else {
    positions_[req.symbol] = pos;
  }
  fees_ += fee;
  OrderAck ack;
  ack.client_id = req.client_id;
  ack.broker_id = broker_id;
  ack.status = AckStatus::Accepted;
  ack.fill = ExecutionReport{bar_, feed(req.symbol)[bar_].timestamp, price, qty, fee};
  return remember(ack);
}

AccountSnapshot SimulatedExchange::account_snapshot() const {
  AccountSnapshot s;
  s.cash = cash_;
  s.fees_paid = fees_;
  s.positions = positions_;
  s.equity = cash_;
  for (const auto& [sym, q] : positions_) s.equity += q * reference_price(sym);
  return s;
}

AccountSnapshot SimulatedExchange::close_session() {
  auto s = account_snapshot();
  closed_ = true;
  return s;
}

}  // namespace cogtrade::broker
