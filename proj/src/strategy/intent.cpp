#include "cogtrade/strategy/intent.hpp"

#include <cmath>

#include "cogtrade/error.hpp"

namespace cogtrade::strategy {

std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::OpenLong: return "OpenLong";
    case Side::OpenShort: return "OpenShort";
    case Side::CloseLong: return "CloseLong";
    case Side::CloseShort: return "CloseShort";
  }
  return "?";
}

namespace {

TradeIntent make(Side side, std::string symbol, Size size, std::string reason, std::string tag) {
  TradeIntent t;
  t.side = side;
  t.symbol = std::move(symbol);
  t.size = size;
  t.reason = std::move(reason);
  t.tag = std::move(tag);
  return t;
}

}  // namespace

TradeIntent open_long(std::string symbol, double fraction, std::string reason, std::string tag) {
  return make(Side::OpenLong, std::move(symbol), Size::fraction(fraction), std::move(reason),
              std::move(tag));
}

TradeIntent open_short(std::string symbol, double fraction, std::string reason, std::string tag) {
  return make(Side::OpenShort, std::move(symbol), Size::fraction(fraction), std::move(reason),
              std::move(tag));
}

TradeIntent close_long(std::string symbol, std::string reason, std::string tag) {
  return make(Side::CloseLong, std::move(symbol), Size::fraction(1.0), std::move(reason),
              std::move(tag));
}

TradeIntent close_short(std::string symbol, std::string reason, std::string tag) {
  return make(Side::CloseShort, std::move(symbol), Size::fraction(1.0), std::move(reason),
              std::move(tag));
}

void validate(const TradeIntent& intent) {
  const double v = intent.size.value;
  if (!std::isfinite(v) || v <= 0.0) {
    throw Error(ErrorCode::InvalidParameter, "intent size must be positive and finite");
  }
  if (intent.size.kind == Size::Kind::Fraction && v > 1.0) {
    throw Error(ErrorCode::InvalidParameter, "intent fraction must not exceed 1");
  }
}

}  // namespace cogtrade::strategy
