#pragma once

#include <span>
#include <string>
#include <vector>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

using market_data::Candle;
using market_data::CandleSeries;

/// Bars 0..t of each symbol. Strategies only ever see this view, so nothing
/// after bar t is reachable.
class MarketHistory {
 public:
  struct Entry {
    std::string symbol;
    std::span<const Candle> bars;
  };

  /// All series must be aligned (same length and timestamps); the first one
  /// is the primary symbol. Throws MisalignedSeries.
  MarketHistory(const std::vector<const CandleSeries*>& series, std::size_t t);
  MarketHistory(const CandleSeries& series, std::size_t t) : MarketHistory({&series}, t) {}
  MarketHistory(std::vector<Entry> entries);

  std::size_t index() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_ + 1; }
  const std::string& primary_symbol() const { return entries_.front().symbol; }
  std::span<const Candle> primary() const { return entries_.front().bars; }
  const Candle& current() const { return entries_.front().bars.back(); }
  /// Throws UnknownSymbol.
  std::span<const Candle> bars(const std::string& symbol) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  /// The same data cut at an earlier bar.
  MarketHistory prefix(std::size_t t) const;

 private:
  std::vector<Entry> entries_;
  std::size_t t_ = 0;
};

/// Throws MisalignedSeries unless every series has the same timestamps.
void require_aligned(const std::vector<const CandleSeries*>& series);

}  // namespace cogtrade::strategy
