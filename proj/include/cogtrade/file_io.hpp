#pragma once

#include <filesystem>
#include <string>

namespace cogtrade {

/// Writes to a sibling temp file and renames it over `target`. Throws IoError.
void write_file_atomically(const std::filesystem::path& target, const std::string& content);

/// Whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace cogtrade
