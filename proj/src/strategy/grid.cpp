#include "cogtrade/strategy/grid.hpp"

#include <algorithm>

namespace cogtrade::strategy {

GridState::GridState(GridParams params) : params_(params), filled_(params.levels, false) {}

std::size_t GridState::filled_count() const noexcept {
  return static_cast<std::size_t>(std::count(filled_.begin(), filled_.end(), true));
}

GridState::Events GridState::push(double close) {
  Events ev;
  if (!anchor_) {
    anchor_ = close;
    return ev;
  }
  if (filled_count() == 0 && close > *anchor_) anchor_ = close;
  for (std::size_t k = 1; k <= params_.levels; ++k) {
    if (filled_[k - 1] && close >= level_price(k) + params_.spacing) {
      filled_[k - 1] = false;
      ev.closed.push_back(k);
    }
  }
  for (std::size_t k = 1; k <= params_.levels; ++k) {
    if (!filled_[k - 1] && close <= level_price(k)) {
      filled_[k - 1] = true;
      ev.opened.push_back(k);
    }
  }
  return ev;
}

std::string grid_tag(std::size_t level) { return "grid-" + std::to_string(level); }

}  // namespace cogtrade::strategy
