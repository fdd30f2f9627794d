#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogtrade/strategy/intent.hpp"

namespace cogtrade::backtest {

using strategy::Side;
using strategy::TradeIntent;

struct CostSettings {
  double fee_rate = 0.001;    // proportional, charged on price * quantity
  double slippage_bps = 5.0;  // applied against the trader

  /// Throws InvalidConfig.
  void validate() const;
};

inline bool is_buy(Side s) noexcept { return s == Side::OpenLong || s == Side::CloseShort; }

/// Reference price moved against the trader by the slippage.
double execution_price(double reference, bool buy, const CostSettings& costs);
double fee_amount(double price, double quantity, const CostSettings& costs);

/// quantity = fraction * snapshot / (price * (1 + fee_rate)), capped and shrunk until
/// price * quantity + fee fits in `available` when `spot` is set. Zero when
/// nothing fits.
double quantity_for_fraction(double fraction, double snapshot, double price, double available,
                             bool spot, const CostSettings& costs);

struct Fill {
  std::uint64_t order_id = 0;
  std::size_t bar = 0;
  std::int64_t timestamp = 0;
  std::string symbol;
  Side side = Side::OpenLong;
  double price = 0.0;
  double quantity = 0.0;  // always positive
  double fee = 0.0;
  std::uint64_t lot_id = 0;
  std::string reason;
  std::string tag;
  bool forced = false;  // end-of-data liquidation

  bool operator==(const Fill&) const = default;
};

enum class RejectReason { InsufficientFunds, NoPosition, ShortingDisabled, InvalidSize, UnknownSymbol };
std::string to_string(RejectReason reason);

}  // namespace cogtrade::backtest
