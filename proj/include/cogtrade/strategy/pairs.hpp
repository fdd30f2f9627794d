#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cogtrade/indicators/streams.hpp"
#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::strategy {

enum class PairAction { LongA_ShortB, ShortA_LongB, Exit };

struct PairSignal {
  std::size_t index = 0;
  PairAction action = PairAction::Exit;
  bool operator==(const PairSignal&) const = default;
};

struct PairsParams {
  std::size_t lookback = 20;
  double z_in = 2.0;
  double z_out = 0.5;

  /// Throws InvalidConfig.
  void validate() const;
};

/// Rolling z-score of log(close_a) - log(close_b) with a population standard
/// deviation over `lookback` bars including the current one. A window whose
/// std is within 1e-12 of zero (relative to the mean) has no z-score.
class PairsDetector {
 public:
  explicit PairsDetector(PairsParams params);

  std::optional<PairAction> push(double close_a, double close_b);
  std::optional<double> z() const noexcept { return z_; }
  std::optional<PairAction> position() const noexcept { return position_; }

 private:
  PairsParams params_;
  indicators::RollingWindow<double> window_;
  std::optional<double> z_;
  std::optional<PairAction> position_;
};

/// Throws MisalignedSeries when timestamps differ.
std::vector<PairSignal> pairs_signals(const market_data::CandleSeries& a,
                                      const market_data::CandleSeries& b, std::size_t lookback,
                                      double z_in, double z_out);

}  // namespace cogtrade::strategy
