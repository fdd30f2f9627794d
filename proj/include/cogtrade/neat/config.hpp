#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace cogtrade::neat {

struct MutationRates {
  double weight = 0.8;          // chance a genome gets its weights mutated
  double weight_step = 0.5;     // perturbation drawn uniformly from [-step, step]
  double weight_reset = 0.1;    // per-connection chance of a reset instead of a perturbation
  double weight_init = 1.0;     // new and reset weights are uniform in [-init, init]
  double add_connection = 0.05;
  double add_node = 0.03;
  double reenable = 0.25;       // chance a gene enabled in only one parent stays enabled
};

struct EvolutionConfig {
  std::size_t population = 150;
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 0.4;
  double compatibility_threshold = 3.0;
  MutationRates mutation;
  double crossover_rate = 0.75;
  double survival_threshold = 0.2;
  std::size_t elitism = 1;
  // Champions of species at least this large are copied unchanged.
  std::size_t species_elitism_min_size = 5;
  std::size_t staleness_limit = 15;
  std::size_t max_generations = 100;
  std::uint64_t seed = 0;
  std::optional<double> fitness_threshold;
  std::size_t threads = 1;  // 0 = hardware concurrency

  /// Throws InvalidConfig.
  void validate() const;
};

}  // namespace cogtrade::neat
