#include "cogtrade/indicators/volume_profile.hpp"

#include <algorithm>

#include "cogtrade/error.hpp"

namespace cogtrade::indicators {

double VolumeProfile::bucket_width() const noexcept {
  return volumes.empty() ? 0.0 : (high - low) / static_cast<double>(volumes.size());
}

std::size_t VolumeProfile::point_of_control() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < volumes.size(); ++i) {
    if (volumes[i] > volumes[best]) best = i;
  }
  return best;
}

double VolumeProfile::bucket_mid(std::size_t i) const noexcept {
  return low + (static_cast<double>(i) + 0.5) * bucket_width();
}

double VolumeProfile::total_volume() const noexcept {
  double total = 0.0;
  for (double v : volumes) total += v;
  return total;
}

VolumeProfile volume_profile(std::span<const market_data::Candle> candles, std::size_t buckets) {
  if (buckets == 0) throw Error(ErrorCode::InvalidParameter, "volume profile needs >= 1 bucket");
  if (candles.empty()) throw Error(ErrorCode::PeriodExceedsSeries, "volume profile of no bars");
  VolumeProfile profile;
  profile.low = candles.front().low;
  profile.high = candles.front().high;
  for (const auto& c : candles) {
    profile.low = std::min(profile.low, c.low);
    profile.high = std::max(profile.high, c.high);
  }
  profile.volumes.assign(buckets, 0.0);
  const double width = profile.bucket_width();
  for (const auto& c : candles) {
    std::size_t idx = 0;
    if (width > 0.0) {
      const double tp = market_data::typical_price(c);
      const double pos = (tp - profile.low) / width;
      idx = std::min(buckets - 1, static_cast<std::size_t>(std::max(0.0, pos)));
      // Bucket k starts at low + k*width. On tick-grid data prices often sit
      // exactly on an edge, where the division above can round either way.
      auto edge = [&](std::size_t k) { return profile.low + static_cast<double>(k) * width; };
      while (idx + 1 < buckets && tp >= edge(idx + 1)) ++idx;
      while (idx > 0 && tp < edge(idx)) --idx;
    }
    profile.volumes[idx] += c.volume;
  }
  return profile;
}

}  // namespace cogtrade::indicators
