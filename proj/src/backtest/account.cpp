#include "cogtrade/backtest/account.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::backtest {

TradeRecord make_trade(const Fill& entry, const Fill& exit) {
  TradeRecord t;
  t.symbol = entry.symbol;
  t.is_long = entry.side == Side::OpenLong;
  t.entry = entry;
  t.exit = exit;
  const double gross = (exit.price - entry.price) * entry.quantity * (t.is_long ? 1.0 : -1.0);
  t.pnl = gross - entry.fee - exit.fee;
  t.profit_pct = t.pnl / (entry.price * entry.quantity + entry.fee) * 100.0;
  t.forced = exit.forced;
  return t;
}

Account::Account(double initial_cash, bool margin)
    : initial_cash_(initial_cash), cash_(initial_cash), margin_(margin) {
  if (!std::isfinite(initial_cash) || initial_cash <= 0.0) {
    throw Error(ErrorCode::InvalidConfig, "initial cash must be positive");
  }
}

const Lot* Account::find_lot(std::uint64_t id) const {
  for (const auto& l : lots_) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

double Account::position(const std::string& symbol) const {
  double q = 0.0;
  for (const auto& l : lots_) {
    if (l.symbol == symbol) q += l.quantity;
  }
  return q;
}

std::map<std::string, PositionSummary> Account::positions() const {
  std::map<std::string, double> cost;
  std::map<std::string, PositionSummary> out;
  for (const auto& l : lots_) {
    out[l.symbol].quantity += l.quantity;
    cost[l.symbol] += l.quantity * l.entry_price;
  }
  for (auto& [sym, p] : out) p.average_entry = p.quantity != 0.0 ? cost[sym] / p.quantity : 0.0;
  return out;
}

std::vector<const Lot*> Account::matching_lots(const TradeIntent& close) const {
  std::vector<const Lot*> out;
  const bool want_long = close.side == Side::CloseLong;
  for (const auto& l : lots_) {
    if (l.symbol != close.symbol || l.is_long() != want_long) continue;
    if (close.lot_id) {
      if (l.id != *close.lot_id) continue;
    } else if (!close.tag.empty() && l.tag != close.tag) {
      continue;
    }
    out.push_back(&l);
  }
  return out;
}

double Account::equity(const std::function<double(const std::string&)>& price_of) const {
  double e = cash_;
  for (const auto& l : lots_) e += l.quantity * price_of(l.symbol);
  return e;
}

std::uint64_t Account::open_lot(const Fill& fill) {
  Lot lot;
  lot.id = next_lot_++;
  lot.symbol = fill.symbol;
  lot.tag = fill.tag;
  const bool is_long = fill.side == Side::OpenLong;
  lot.quantity = is_long ? fill.quantity : -fill.quantity;
  lot.entry_price = fill.price;
  lot.entry_fee = fill.fee;
  lot.entry_bar = fill.bar;
  lot.entry_ts = fill.timestamp;
  lot.reason = fill.reason;
  const double notional = fill.price * fill.quantity;
  cash_ += is_long ? -(notional + fill.fee) : (notional - fill.fee);
  fees_paid_ += fill.fee;
  Fill entry = fill;
  entry.lot_id = lot.id;
  entries_.emplace(lot.id, entry);
  lots_.push_back(std::move(lot));
  return lots_.back().id;
}

TradeRecord Account::close_lot(std::uint64_t lot_id, const Fill& fill) {
  auto it = std::find_if(lots_.begin(), lots_.end(), [&](const Lot& l) { return l.id == lot_id; });
  if (it == lots_.end()) throw Error(ErrorCode::InvalidParameter, "no open lot " + std::to_string(lot_id));
  const double notional = fill.price * fill.quantity;
  cash_ += it->is_long() ? (notional - fill.fee) : -(notional + fill.fee);
  fees_paid_ += fill.fee;
  auto entry = entries_.at(lot_id);
  lots_.erase(it);
  entries_.erase(lot_id);
  return make_trade(entry, fill);
}

Resolution resolve_intent(const Account& account, const TradeIntent& intent, double reference,
                          double snapshot, const CostSettings& costs) {
  Resolution r;
  if (!std::isfinite(intent.size.value) || intent.size.value <= 0.0 ||
      (intent.size.kind == strategy::Size::Kind::Fraction && intent.size.value > 1.0)) {
    r.rejected = RejectReason::InvalidSize;
    return r;
  }
  const bool buy = is_buy(intent.side);
  const double price = execution_price(reference, buy, costs);
  if (!strategy::is_open(intent.side)) {
    const auto lots = account.matching_lots(intent);
    if (lots.empty()) {
      r.rejected = RejectReason::NoPosition;
      return r;
    }
    for (const auto* lot : lots) {
      const double q = std::abs(lot->quantity);
      r.fills.push_back({intent.side, intent.symbol, price, q, fee_amount(price, q, costs), lot->id,
                         intent.reason, lot->tag});
    }
    return r;
  }
  if (intent.side == Side::OpenShort && !account.margin()) {
    r.rejected = RejectReason::ShortingDisabled;
    return r;
  }
  const bool spot_check = intent.side == Side::OpenLong && !account.margin();
  double q = 0.0;
  if (intent.size.kind == strategy::Size::Kind::Quantity) {
    q = intent.size.value;
    if (spot_check && price * q + fee_amount(price, q, costs) > account.cash()) q = 0.0;
  } else {
    q = quantity_for_fraction(intent.size.value, snapshot, price, account.cash(), spot_check, costs);
  }
  if (!(q > 0.0)) {
    r.rejected = RejectReason::InsufficientFunds;
    return r;
  }
  r.fills.push_back({intent.side, intent.symbol, price, q, fee_amount(price, q, costs), std::nullopt,
                     intent.reason, intent.tag});
  return r;
}

}  // namespace cogtrade::backtest
