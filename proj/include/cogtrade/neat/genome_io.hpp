#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cogtrade/neat/genome.hpp"

namespace cogtrade::neat {

// Line-oriented text format:
//   genome <inputs> <outputs>
//   fitness <value>                                   (optional)
//   node <id> <input|bias|output|hidden>
//   conn <innovation> <from> <to> <weight> <1|0>

void write_genome(const Genome& genome, std::ostream& out);
std::string genome_to_text(const Genome& genome);
void save_genome(const Genome& genome, const std::filesystem::path& path);

/// Throws MalformedGenome with the offending line, CyclicGenome.
Genome read_genome(std::istream& in);
Genome genome_from_text(const std::string& text);
Genome load_genome(const std::filesystem::path& path);

}  // namespace cogtrade::neat
