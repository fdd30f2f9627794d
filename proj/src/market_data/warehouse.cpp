#include "cogtrade/market_data/warehouse.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cogtrade/error.hpp"
#include "cogtrade/file_io.hpp"
#include "cogtrade/market_data/csv.hpp"

namespace cogtrade::market_data {

namespace fs = std::filesystem;

fs::path Warehouse::data_path(const std::string& symbol, std::int64_t interval) const {
  return root_ / symbol / (std::to_string(interval) + ".csv");
}

fs::path Warehouse::meta_path(const std::string& symbol, std::int64_t interval) const {
  return root_ / symbol / (std::to_string(interval) + ".meta.json");
}

DatasetMeta Warehouse::store(const CandleSeries& series, const std::string& source) const {
  std::error_code ec;
  fs::create_directories(root_ / series.symbol(), ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create warehouse directory: " + ec.message());

  std::ostringstream csv;
  write_csv(series, csv);
  const DatasetMeta meta = series.meta(source);
  // Render both before touching disk so a failure leaves the old pair intact.
  const std::string meta_text = to_json_text(meta);
  write_file_atomically(data_path(series.symbol(), series.interval()), csv.str());
  write_file_atomically(meta_path(series.symbol(), series.interval()), meta_text);
  return meta;
}

CandleSeries Warehouse::load(const std::string& symbol, std::int64_t interval,
                             bool allow_gaps) const {
  const auto path = data_path(symbol, interval);
  if (!fs::exists(path)) {
    throw Error(ErrorCode::UnknownSymbol, "no warehouse data at " + path.string());
  }
  return parse_csv(path, symbol, interval, ParseOptions{allow_gaps});
}

std::optional<DatasetMeta> Warehouse::read_meta(const std::string& symbol,
                                                std::int64_t interval) const {
  std::ifstream in(meta_path(symbol, interval));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return meta_from_json_text(buf.str());
}

std::string to_json_text(const DatasetMeta& meta) {
  nlohmann::ordered_json j;
  j["source"] = meta.source;
  j["symbol"] = meta.symbol;
  j["interval"] = meta.interval;
  j["first_ts"] = meta.first_ts;
  j["last_ts"] = meta.last_ts;
  j["bar_count"] = meta.bar_count;
  return j.dump(2) + "\n";
}

DatasetMeta meta_from_json_text(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    DatasetMeta m;
    m.source = j.at("source").get<std::string>();
    m.symbol = j.at("symbol").get<std::string>();
    m.interval = j.at("interval").get<std::int64_t>();
    m.first_ts = j.at("first_ts").get<std::int64_t>();
    m.last_ts = j.at("last_ts").get<std::int64_t>();
    m.bar_count = j.at("bar_count").get<std::size_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedRow, std::string("bad metadata: ") + e.what());
  }
}

}  // namespace cogtrade::market_data
