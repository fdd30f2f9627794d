#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cogtrade::strategy {

enum class Side { OpenLong, OpenShort, CloseLong, CloseShort };

std::string_view to_string(Side side) noexcept;
inline bool is_open(Side s) noexcept { return s == Side::OpenLong || s == Side::OpenShort; }
inline bool is_long(Side s) noexcept { return s == Side::OpenLong || s == Side::CloseLong; }

struct Size {
  enum class Kind { Fraction, Quantity };
  Kind kind = Kind::Fraction;
  double value = 1.0;

  static Size fraction(double f) { return {Kind::Fraction, f}; }
  static Size quantity(double q) { return {Kind::Quantity, q}; }
  bool operator==(const Size&) const = default;
};

/// Opens are sized by `size`: a fraction of the cash available when the
/// batch is filled, or an absolute quantity. Closes always close the whole
/// of every matching lot; they match by `lot_id` when set, otherwise by `tag`
/// when non-empty, otherwise every lot of that direction on the symbol.
struct TradeIntent {
  Side side = Side::OpenLong;
  std::string symbol;
  Size size;
  std::string reason;
  std::string tag;
  std::optional<std::uint64_t> lot_id;

  bool operator==(const TradeIntent&) const = default;
};

TradeIntent open_long(std::string symbol, double fraction, std::string reason, std::string tag = {});
TradeIntent open_short(std::string symbol, double fraction, std::string reason, std::string tag = {});
TradeIntent close_long(std::string symbol, std::string reason, std::string tag = {});
TradeIntent close_short(std::string symbol, std::string reason, std::string tag = {});

/// Throws InvalidParameter when size is not positive and finite, or a
/// fraction exceeds 1.
void validate(const TradeIntent& intent);

}  // namespace cogtrade::strategy
