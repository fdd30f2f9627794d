#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cogtrade/backtest/execution.hpp"

namespace cogtrade::backtest {

/// One open position opened by a single fill. Quantity is signed: negative
/// for shorts.
struct Lot {
  std::uint64_t id = 0;
  std::string symbol;
  std::string tag;
  double quantity = 0.0;
  double entry_price = 0.0;
  double entry_fee = 0.0;
  std::size_t entry_bar = 0;
  std::int64_t entry_ts = 0;
  std::string reason;

  bool is_long() const noexcept { return quantity > 0.0; }
  bool operator==(const Lot&) const = default;
};

struct TradeRecord {
  std::string symbol;
  bool is_long = true;
  Fill entry;
  Fill exit;
  double pnl = 0.0;         // net of both fees
  double profit_pct = 0.0;  // pnl relative to entry cost including the entry fee
  bool forced = false;

  bool operator==(const TradeRecord&) const = default;
};

/// Profit of a round trip, net of fees.
TradeRecord make_trade(const Fill& entry, const Fill& exit);

struct PositionSummary {
  double quantity = 0.0;
  double average_entry = 0.0;
};

class Account {
 public:
  /// Throws InvalidConfig unless the cash is positive and finite.
  explicit Account(double initial_cash, bool margin = false);

  double initial_cash() const noexcept { return initial_cash_; }
  double cash() const noexcept { return cash_; }
  double fees_paid() const noexcept { return fees_paid_; }
  bool margin() const noexcept { return margin_; }
  const std::vector<Lot>& lots() const noexcept { return lots_; }
  const Lot* find_lot(std::uint64_t id) const;
  double position(const std::string& symbol) const;
  std::map<std::string, PositionSummary> positions() const;

  /// Lots matching a close intent, oldest first.
  std::vector<const Lot*> matching_lots(const TradeIntent& close) const;

  /// cash + sum of quantity * price.
  double equity(const std::function<double(const std::string&)>& price_of) const;

  /// Books an opening fill and returns the new lot id.
  std::uint64_t open_lot(const Fill& fill);
  /// Closes a whole lot with `fill` (quantity must equal the lot size).
  TradeRecord close_lot(std::uint64_t lot_id, const Fill& fill);

 private:
  double initial_cash_;
  double cash_;
  double fees_paid_ = 0.0;
  bool margin_;
  std::uint64_t next_lot_ = 1;
  std::vector<Lot> lots_;
  std::map<std::uint64_t, Fill> entries_;
};

/// A fill the account would accept for one intent, priced from `reference`.
struct PlannedFill {
  Side side = Side::OpenLong;
  std::string symbol;
  double price = 0.0;
  double quantity = 0.0;
  double fee = 0.0;
  std::optional<std::uint64_t> close_lot;
  std::string reason;
  std::string tag;
};

struct Resolution {
  std::vector<PlannedFill> fills;
  std::optional<RejectReason> rejected;
};

/// Turns an intent into fills against the current account. Opens are sized
/// from `snapshot` (cash at the start of the batch); closes take whole lots.
Resolution resolve_intent(const Account& account, const TradeIntent& intent, double reference,
                          double snapshot, const CostSettings& costs);

}  // namespace cogtrade::backtest
