#include "cogtrade/backtest/metrics.hpp"

#include <algorithm>

#include "cogtrade/error.hpp"

namespace cogtrade::backtest {

Metrics compute_metrics(std::span<const double> equity, std::span<const TradeRecord> trades) {
  if (equity.empty()) throw Error(ErrorCode::InvalidParameter, "empty equity curve");
  Metrics m;
  m.net_profit_pct = (equity.back() - equity.front()) / equity.front() * 100.0;
  double peak = equity.front();
  for (double e : equity) {
    peak = std::max(peak, e);
    if (peak > 0.0) m.max_drawdown_pct = std::max(m.max_drawdown_pct, (peak - e) / peak * 100.0);
  }
  m.trade_count = trades.size();
  if (!trades.empty()) {
    const auto wins = std::count_if(trades.begin(), trades.end(),
                                    [](const TradeRecord& t) { return t.pnl > 0.0; });
    m.win_rate = static_cast<double>(wins) / static_cast<double>(trades.size());
  }
  return m;
}

double score(const Metrics& m, double lambda) { return m.net_profit_pct - lambda * m.max_drawdown_pct; }

}  // namespace cogtrade::backtest
