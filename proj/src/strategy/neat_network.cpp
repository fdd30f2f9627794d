#include "cogtrade/strategy/neat_network.hpp"

#include <cmath>

#include "cogtrade/error.hpp"
#include "cogtrade/neat/network.hpp"
#include "cogtrade/strategy/strategy.hpp"

namespace cogtrade::strategy {

std::size_t feature_count(const std::vector<indicators::IndicatorSpec>& specs) {
  std::size_t n = 0;
  for (const auto& s : specs) n += indicators::line_count(s.kind);
  return n;
}

FeatureStream::FeatureStream(const std::vector<indicators::IndicatorSpec>& specs)
    : width_(feature_count(specs)) {
  streams_.reserve(specs.size());
  for (const auto& s : specs) streams_.emplace_back(s);
}

std::optional<std::vector<double>> FeatureStream::push(const market_data::Candle& bar) {
  std::vector<double> row;
  row.reserve(width_);
  bool ready = true;
  for (auto& s : streams_) {
    const auto v = s.push(bar);
    for (std::size_t l = 0; l < s.lines(); ++l) {
      if (!v[l]) {
        ready = false;
      } else {
        row.push_back(*v[l]);
      }
    }
  }
  if (!ready) return std::nullopt;
  return row;
}

Normalizer fit_normalizer(const std::vector<indicators::IndicatorSpec>& specs,
                          std::span<const market_data::Candle> bars) {
  FeatureStream features(specs);
  std::vector<std::vector<double>> rows;
  for (const auto& bar : bars) {
    if (auto r = features.push(bar)) rows.push_back(std::move(*r));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::PeriodExceedsSeries, "no bar has every network input defined");
  }
  const std::size_t w = features.width();
  Normalizer norm;
  norm.mean.assign(w, 0.0);
  norm.std.assign(w, 0.0);
  const auto n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < w; ++j) norm.mean[j] += r[j];
  }
  for (auto& m : norm.mean) m /= n;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < w; ++j) norm.std[j] += (r[j] - norm.mean[j]) * (r[j] - norm.mean[j]);
  }
  for (auto& s : norm.std) {
    s = std::sqrt(s / n);
    if (!(s > 0.0)) s = 1.0;
  }
  return norm;
}

void normalize(const Normalizer& norm, std::vector<double>& row) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = (row[j] - norm.mean[j]) / norm.std[j];
}

NetworkAction decide(std::span<const double> out) {
  if (out.size() != kNetworkOutputs) {
    throw Error(ErrorCode::ArityMismatch, "network must have three outputs");
  }
  const double open = out[0], close = out[1], hold = out[2];
  if (open > close && open > hold) return NetworkAction::Open;
  if (close > open && close > hold) return NetworkAction::Close;
  return NetworkAction::Hold;
}

namespace detail {

class NeatNetworkStrategy final : public Strategy {
 public:
  explicit NeatNetworkStrategy(const StrategyConfig& config)
      : config_(config), network_(config.neat.genome), features_(config.indicators) {}

  StepResult step(const MarketHistory& history) override {
    StepResult r;
    auto row = features_.push(history.current());
    if (!row) {
      r.warming_up = true;
      return r;
    }
    normalize(config_.neat.normalizer, *row);
    const auto action = decide(network_.activate(*row));
    const auto& sym = history.primary_symbol();
    if (action == NetworkAction::Open && !long_) {
      r.opens.push_back(open_long(sym, config_.fraction, "network-open"));
      long_ = true;
    } else if (action == NetworkAction::Close && long_) {
      r.closes.push_back(close_long(sym, "network-close"));
      long_ = false;
    }
    return r;
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<NeatNetworkStrategy>(*this);
  }

 private:
  StrategyConfig config_;
  neat::Network network_;
  FeatureStream features_;
  bool long_ = false;
};

std::unique_ptr<Strategy> make_neat_strategy(const StrategyConfig& config) {
  return std::make_unique<NeatNetworkStrategy>(config);
}

}  // namespace detail
}  // namespace cogtrade::strategy
