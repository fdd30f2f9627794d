#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cogtrade/backtest/execution.hpp"

namespace cogtrade::broker {

enum class OrderSide { Buy, Sell };
/// Only market orders exist; the field leaves room for more.
enum class OrderType { Market };

struct OrderRequest {
  std::string client_id;
  std::string symbol;
  OrderSide side = OrderSide::Buy;
  /// Base quantity. Ignored when quote_amount is set.
  double quantity = 0.0;
  /// Spend (buy) or raise (sell) this much quote currency, fee included.
  std::optional<double> quote_amount;
  OrderType type = OrderType::Market;
};

enum class AckStatus { Accepted, Rejected };

struct ExecutionReport {
  std::size_t bar = 0;
  std::int64_t timestamp = 0;
  double price = 0.0;
  double quantity = 0.0;
  double fee = 0.0;

  bool operator==(const ExecutionReport&) const = default;
};

struct OrderAck {
  std::string client_id;
  std::string broker_id;
  AckStatus status = AckStatus::Rejected;
  std::optional<ExecutionReport> fill;  // always present on Accepted
  std::string reject_reason;

  bool operator==(const OrderAck&) const = default;
};

struct AccountSnapshot {
  double cash = 0.0;
  double fees_paid = 0.0;
  std::map<std::string, double> positions;  // signed net quantity
  double equity = 0.0;                      // marked at the current price

  bool operator==(const AccountSnapshot&) const = default;
};

struct SymbolInfo {
  std::string symbol;
  std::int64_t interval = 0;
  std::size_t bar = 0;
  double price = 0.0;  // price an order would reference right now
};

struct SessionConfig {
  double initial_cash = 10000.0;
  backtest::CostSettings costs;
  bool margin = false;
};

/// Five calls are all the Core needs from a broker.
class BrokerEndpoint {
 public:
  virtual ~BrokerEndpoint() = default;
  virtual void init(const SessionConfig& config) = 0;
  /// Duplicate client ids return the original ack without side effects.
  virtual OrderAck place_order(const OrderRequest& request) = 0;
  virtual AccountSnapshot account_snapshot() const = 0;
  /// Throws UnknownSymbol.
  virtual SymbolInfo symbol_info(const std::string& symbol) const = 0;
  virtual AccountSnapshot close_session() = 0;
};

}  // namespace cogtrade::broker
