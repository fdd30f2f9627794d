#include "cogtrade/backtest/execution.hpp"

#include <algorithm>
#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::backtest {

void CostSettings::validate() const {
  if (!std::isfinite(fee_rate) || fee_rate < 0.0 || fee_rate >= 1.0) {
    throw Error(ErrorCode::InvalidConfig, "fee rate must lie in [0,1)");
  }
  if (!std::isfinite(slippage_bps) || slippage_bps < 0.0 || slippage_bps >= 10000.0) {
    throw Error(ErrorCode::InvalidConfig, "slippage must lie in [0,10000) bps");
  }
}

double execution_price(double reference, bool buy, const CostSettings& costs) {
  const double slip = costs.slippage_bps / 10000.0;
  return buy ? reference * (1.0 + slip) : reference * (1.0 - slip);
}

double fee_amount(double price, double quantity, const CostSettings& costs) {
  return costs.fee_rate * price * quantity;
}

double quantity_for_fraction(double fraction, double snapshot, double price, double available,
                             bool spot, const CostSettings& costs) {
  if (!(snapshot > 0.0) || !(price > 0.0)) return 0.0;
  double q = fraction * snapshot / (price * (1.0 + costs.fee_rate));
  if (spot) {
    // Earlier opens in the batch may have spent part of the snapshot.
    q = std::min(q, available / (price * (1.0 + costs.fee_rate)));
    while (q > 0.0 && price * q + fee_amount(price, q, costs) > available) {
      q = std::nextafter(q, 0.0);
    }
  }
  return q > 0.0 ? q : 0.0;
}

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::InsufficientFunds: return "InsufficientFunds";
    case RejectReason::NoPosition: return "NoPosition";
    case RejectReason::ShortingDisabled: return "ShortingDisabled";
    case RejectReason::InvalidSize: return "InvalidSize";
    case RejectReason::UnknownSymbol: return "UnknownSymbol";
  }
  return "?";
}

}  // namespace cogtrade::backtest
