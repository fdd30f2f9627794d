#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

enum class Trend { Bullish, Bearish, Sideways };

std::string_view to_string(Trend trend) noexcept;

/// Bullish when the short EMA is above the long EMA and ADX >= adx_min,
/// Bearish when below with the same ADX condition, Sideways otherwise and
/// while any input is warming up. Throws InvalidPeriods.
std::vector<Trend> trend_identify(const market_data::CandleSeries& series, std::size_t p_short,
                                  std::size_t p_long, std::size_t adx_period, double adx_min);

}  // namespace cogtrade::strategy
