#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cogtrade {

/// Shortest decimal representation that parses back to the identical double.
std::string format_double(double value);

/// Strict parses: the whole field must be consumed, surrounding blanks are trimmed.
std::optional<double> parse_double(std::string_view text);
std::optional<std::int64_t> parse_int64(std::string_view text);

std::string_view trim(std::string_view text) noexcept;

}  // namespace cogtrade
