#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cogtrade/neat/config.hpp"
#include "cogtrade/neat/genome.hpp"
#include "cogtrade/neat/mutation.hpp"

namespace cogtrade::neat {

double compatibility_distance(const Genome& a, const Genome& b, const EvolutionConfig& config);

struct Species {
  std::size_t id = 0;
  Genome representative;
  std::vector<std::size_t> members;  // indices into Population::genomes
  std::size_t staleness = 0;
  std::optional<double> best_fitness;
};

struct Population {
  std::vector<Genome> genomes;
  std::vector<Species> species;
  InnovationTracker tracker;
  std::size_t generation = 0;
  std::size_t next_species_id = 0;
};

/// Fully connected minimal genomes (inputs and bias to every output) with
/// random weights, already speciated.
Population initial_population(std::size_t inputs, std::size_t outputs,
                              const EvolutionConfig& config);

/// Each genome joins the first species whose representative is within the
/// threshold, otherwise founds a new one. Existing representatives are kept,
/// species left empty are dropped.
void speciate(Population& population, const EvolutionConfig& config);

/// Per-species offspring counts by largest remainder on shared fitness.
/// Sums to config.population.
std::vector<std::size_t> offspring_quotas(const Population& population,
                                          const EvolutionConfig& config);

/// Requires every genome to carry a fitness (UnevaluatedParent otherwise).
Population next_generation(const Population& population, const EvolutionConfig& config);

using FitnessFn = std::function<double(const Genome&)>;

/// Evaluates unevaluated genomes, possibly on several threads.
void evaluate(Population& population, const FitnessFn& fitness, std::size_t threads);

struct GenerationStats {
  std::size_t generation = 0;
  double best = 0.0;
  double mean = 0.0;
  std::size_t species = 0;
};

struct EvolutionResult {
  Genome best;
  std::vector<GenerationStats> history;
  bool reached_threshold = false;
};

/// Runs generations 0..max_generations (inclusive), stopping early once the
/// fitness threshold is reached. The best genome ever seen is returned.
EvolutionResult evolve(std::size_t inputs, std::size_t outputs, const EvolutionConfig& config,
                       const FitnessFn& fitness);

}  // namespace cogtrade::neat
