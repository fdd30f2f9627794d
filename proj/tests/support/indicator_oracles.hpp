#pragma once

// Definitional indicator implementations used only as test oracles. They work
// on whole arrays, use textbook formulas, and share no code with the library.

#include <cstddef>
#include <optional>
#include <vector>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::testing::oracle {

using Column = std::vector<std::optional<double>>;
using market_data::Candle;

Column sma(const std::vector<Candle>& bars, std::size_t p);
Column ema(const std::vector<Candle>& bars, std::size_t p);
Column ema_of(const Column& input, std::size_t p);
Column rsi(const std::vector<Candle>& bars, std::size_t p);
Column atr(const std::vector<Candle>& bars, std::size_t p);
std::vector<Column> macd(const std::vector<Candle>& bars, std::size_t fast, std::size_t slow,
                         std::size_t signal);
std::vector<Column> bollinger(const std::vector<Candle>& bars, std::size_t p, double k);
Column obv(const std::vector<Candle>& bars);
Column momentum(const std::vector<Candle>& bars, std::size_t p);
Column force_index(const std::vector<Candle>& bars, std::size_t p);
Column mfi(const std::vector<Candle>& bars, std::size_t p);
Column cci(const std::vector<Candle>& bars, std::size_t p);
Column williams_r(const std::vector<Candle>& bars, std::size_t p);
Column adx(const std::vector<Candle>& bars, std::size_t p);
Column kst(const std::vector<Candle>& bars);
Column vpvr(const std::vector<Candle>& bars, std::size_t p, std::size_t buckets);
std::vector<double> volume_histogram(const std::vector<Candle>& bars, std::size_t buckets);

}  // namespace cogtrade::testing::oracle
