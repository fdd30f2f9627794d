#include "cogtrade/strategy/pairs.hpp"

#include <cmath>

#include "cogtrade/error.hpp"
#include "cogtrade/strategy/history.hpp"

namespace cogtrade::strategy {

void PairsParams::validate() const {
  if (lookback < 2) throw Error(ErrorCode::InvalidConfig, "pairs lookback must be at least 2");
  if (!std::isfinite(z_in) || !std::isfinite(z_out) || z_out < 0.0 || z_out >= z_in) {
    throw Error(ErrorCode::InvalidConfig, "pairs thresholds need 0 <= z_out < z_in");
  }
}

PairsDetector::PairsDetector(PairsParams params) : params_(params), window_(params.lookback) {
  params_.validate();
}

std::optional<PairAction> PairsDetector::push(double close_a, double close_b) {
  window_.push(std::log(close_a) - std::log(close_b));
  const std::optional<double> prev_z = z_;
  z_.reset();
  if (window_.full()) {
    const auto n = static_cast<double>(window_.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < window_.size(); ++i) mean += window_.at(i);
    mean /= n;
    double var = 0.0;
    for (std::size_t i = 0; i < window_.size(); ++i) {
      const double d = window_.at(i) - mean;
      var += d * d;
    }
    const double sd = std::sqrt(var / n);
    if (sd > 1e-12 * std::max(1.0, std::abs(mean))) z_ = (window_.newest() - mean) / sd;
  }
  if (!z_) return std::nullopt;
  const double az = std::abs(*z_);
  if (position_) {
    if (az < params_.z_out) {
      position_.reset();
      return PairAction::Exit;
    }
    return std::nullopt;
  }
  if (az > params_.z_in && prev_z && std::abs(*prev_z) <= params_.z_in) {
    // Positive z: A is rich relative to B.
    position_ = *z_ > 0.0 ? PairAction::ShortA_LongB : PairAction::LongA_ShortB;
    return position_;
  }
  return std::nullopt;
}

std::vector<PairSignal> pairs_signals(const market_data::CandleSeries& a,
                                      const market_data::CandleSeries& b, std::size_t lookback,
                                      double z_in, double z_out) {
  require_aligned({&a, &b});
  PairsDetector detector({lookback, z_in, z_out});
  std::vector<PairSignal> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto act = detector.push(a[i].close, b[i].close)) out.push_back({i, *act});
  }
  return out;
}

}  // namespace cogtrade::strategy
