#pragma once

#include <span>
#include <vector>

#include "cogtrade/indicators/indicator_spec.hpp"
#include "cogtrade/indicators/streams.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

/// Per-input z-score parameters. A zero std is replaced by 1.
struct Normalizer {
  std::vector<double> mean;
  std::vector<double> std;

  bool operator==(const Normalizer&) const = default;
};

/// All output lines of all specs, in order.
std::size_t feature_count(const std::vector<indicators::IndicatorSpec>& specs);

/// Streams the raw indicator lines for each bar; a row is empty until every
/// line is defined.
class FeatureStream {
 public:
  explicit FeatureStream(const std::vector<indicators::IndicatorSpec>& specs);
  /// Raw values, or nullopt while warming up.
  std::optional<std::vector<double>> push(const market_data::Candle& bar);
  std::size_t width() const noexcept { return width_; }

 private:
  std::vector<indicators::IndicatorStream> streams_;
  std::size_t width_ = 0;
};

/// Mean and population std of each feature over the bars where all features
/// are defined. Throws PeriodExceedsSeries if there is no such bar.
Normalizer fit_normalizer(const std::vector<indicators::IndicatorSpec>& specs,
                          std::span<const market_data::Candle> bars);

void normalize(const Normalizer& norm, std::vector<double>& row);

enum class NetworkAction { Open, Close, Hold };

/// Argmax over (open, close, hold); any tie involving the maximum is Hold.
NetworkAction decide(std::span<const double> outputs);

inline constexpr std::size_t kNetworkOutputs = 3;

}  // namespace cogtrade::strategy
