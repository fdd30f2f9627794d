#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cogtrade/market_data/candle.hpp"

namespace cogtrade::market_data {

/// On-disk store laid out as `<root>/<symbol>/<interval>.csv` with a
/// `<interval>.meta.json` sidecar describing the dataset.
class Warehouse {
 public:
  explicit Warehouse(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const noexcept { return root_; }
  std::filesystem::path data_path(const std::string& symbol, std::int64_t interval) const;
  std::filesystem::path meta_path(const std::string& symbol, std::int64_t interval) const;

  /// Writes both files via temp-file + rename; existing data is replaced only on success.
  DatasetMeta store(const CandleSeries& series, const std::string& source) const;

  CandleSeries load(const std::string& symbol, std::int64_t interval,
                    bool allow_gaps = false) const;
  std::optional<DatasetMeta> read_meta(const std::string& symbol, std::int64_t interval) const;

 private:
  std::filesystem::path root_;
};

std::string to_json_text(const DatasetMeta& meta);
DatasetMeta meta_from_json_text(const std::string& text);

}  // namespace cogtrade::market_data
