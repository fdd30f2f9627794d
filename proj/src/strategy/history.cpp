#include "cogtrade/strategy/history.hpp"

#include "cogtrade/error.hpp"

namespace cogtrade::strategy {

void require_aligned(const std::vector<const CandleSeries*>& series) {
  if (series.empty()) throw Error(ErrorCode::MisalignedSeries, "no series given");
  const auto& first = *series.front();
  for (const auto* s : series) {
    if (s->size() != first.size()) {
      throw Error(ErrorCode::MisalignedSeries,
                  s->symbol() + " has " + std::to_string(s->size()) + " bars, " + first.symbol() +
                      " has " + std::to_string(first.size()));
    }
    for (std::size_t i = 0; i < s->size(); ++i) {
      if ((*s)[i].timestamp != first[i].timestamp) {
        throw Error(ErrorCode::MisalignedSeries, s->symbol() + " and " + first.symbol() +
                                                     " differ at bar " + std::to_string(i));
      }
    }
  }
}

MarketHistory::MarketHistory(const std::vector<const CandleSeries*>& series, std::size_t t) : t_(t) {
  require_aligned(series);
  if (t >= series.front()->size()) {
    throw Error(ErrorCode::InvalidParameter, "history index past the end of the data");
  }
  for (const auto* s : series) entries_.push_back({s->symbol(), s->candles().first(t + 1)});
}

MarketHistory::MarketHistory(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().bars.empty()) {
    throw Error(ErrorCode::InvalidParameter, "history must hold at least one bar");
  }
  t_ = entries_.front().bars.size() - 1;
  for (const auto& e : entries_) {
    if (e.bars.size() != t_ + 1 || e.bars.back().timestamp != entries_.front().bars.back().timestamp) {
      throw Error(ErrorCode::MisalignedSeries, "history entries are not aligned");
    }
  }
}

std::span<const Candle> MarketHistory::bars(const std::string& symbol) const {
  for (const auto& e : entries_) {
    if (e.symbol == symbol) return e.bars;
  }
  throw Error(ErrorCode::UnknownSymbol, "no data for symbol " + symbol);
}

MarketHistory MarketHistory::prefix(std::size_t t) const {
  if (t > t_) throw Error(ErrorCode::InvalidParameter, "prefix beyond history");
  std::vector<Entry> cut;
  for (const auto& e : entries_) cut.push_back({e.symbol, e.bars.first(t + 1)});
  return MarketHistory(std::move(cut));
}

}  // namespace cogtrade::strategy
