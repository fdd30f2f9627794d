#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::indicators {

/// Volume histogram over the visible price range [min low, max high].
/// Each candle's full volume goes to the bucket holding its typical price.
struct VolumeProfile {
  double low = 0.0;
  double high = 0.0;
  std::vector<double> volumes;

  double bucket_width() const noexcept;
  /// Index of the highest-volume bucket; ties go to the lowest price.
  std::size_t point_of_control() const noexcept;
  double bucket_mid(std::size_t i) const noexcept;
  double total_volume() const noexcept;
};

VolumeProfile volume_profile(std::span<const market_data::Candle> candles, std::size_t buckets);

}  // namespace cogtrade::indicators
