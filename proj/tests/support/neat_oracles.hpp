#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cogtrade/neat/config.hpp"
#include "cogtrade/neat/genome.hpp"

namespace cogtrade::testing {

/// Random acyclic genome built directly (no mutation operators involved).
/// Hidden node ids start at inputs+outputs+1, innovations are drawn from a
/// fixed table keyed by (from,to) so that two calls share innovation numbers.
neat::Genome random_genome(std::uint64_t seed, std::size_t inputs, std::size_t outputs,
                           std::size_t hidden, double density, double disabled_share = 0.2);

/// XOR surrogate: 4 minus the summed squared error over the truth table.
double xor_fitness(const neat::Genome& genome);
inline constexpr double kXorThreshold = 3.9;

namespace oracle {

/// Evaluates each output by recursion over incoming enabled connections.
std::vector<double> activate(const neat::Genome& genome, const std::vector<double>& inputs);

/// Gene alignment through an innovation-keyed map.
double distance(const neat::Genome& a, const neat::Genome& b, const neat::EvolutionConfig& config);

}  // namespace oracle
}  // namespace cogtrade::testing
