#pragma once

#include <map>
#include <string>
#include <vector>

#include "cogtrade/broker/broker.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::broker {

/// Which price of the current bar market orders execute at.
enum class PricePhase { Open, Close };

/// Replays aligned candle series and fills market orders at the current
/// bar's open (or close) moved by slippage. Keeps a netting account: one
/// signed quantity per symbol.
class SimulatedExchange final : public BrokerEndpoint {
 public:
  explicit SimulatedExchange(std::vector<market_data::CandleSeries> feeds);

  void init(const SessionConfig& config) override;
  OrderAck place_order(const OrderRequest& request) override;
  AccountSnapshot account_snapshot() const override;
  SymbolInfo symbol_info(const std::string& symbol) const override;
  AccountSnapshot close_session() override;

  /// Moves the replay cursor; bars may only move forward.
  void advance(std::size_t bar, PricePhase phase);
  std::size_t bar() const noexcept { return bar_; }
  std::size_t length() const;
  const std::vector<market_data::CandleSeries>& feeds() const noexcept { return feeds_; }
  bool closed() const noexcept { return closed_; }
  std::size_t orders_received() const noexcept { return acks_.size(); }

 private:
  const market_data::CandleSeries& feed(const std::string& symbol) const;
  double reference_price(const std::string& symbol) const;

  std::vector<market_data::CandleSeries> feeds_;
  SessionConfig config_;
  bool initialized_ = false;
  bool closed_ = false;
  std::size_t bar_ = 0;
  PricePhase phase_ = PricePhase::Open;
  double cash_ = 0.0;
  double fees_ = 0.0;
  std::map<std::string, double> positions_;
  std::map<std::string, OrderAck> acks_;
  std::uint64_t next_broker_id_ = 1;
};

}  // namespace cogtrade::broker
