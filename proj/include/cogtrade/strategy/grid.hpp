#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cogtrade::strategy {

struct GridParams {
  double spacing = 1.0;  // absolute price distance between levels
  std::size_t levels = 5;
};

/// Grid state machine. Level k (1-based) sits at anchor - k*spacing; it is
/// bought when a close reaches it and sold once a close reaches one spacing
/// above it. While every level is flat the anchor follows rising closes; it
/// is frozen while any level is held.
class GridState {
 public:
  explicit GridState(GridParams params);

  struct Events {
    std::vector<std::size_t> opened;  // level numbers, ascending
    std::vector<std::size_t> closed;
  };

  Events push(double close);

  std::optional<double> anchor() const noexcept { return anchor_; }
  double level_price(std::size_t k) const { return *anchor_ - static_cast<double>(k) * params_.spacing; }
  bool filled(std::size_t k) const { return filled_[k - 1]; }
  std::size_t filled_count() const noexcept;
  const GridParams& params() const noexcept { return params_; }

 private:
  GridParams params_;
  std::optional<double> anchor_;
  std::vector<bool> filled_;
};

std::string grid_tag(std::size_t level);

}  // namespace cogtrade::strategy
