#pragma once

#include <span>
#include <vector>

#include "cogtrade/neat/genome.hpp"

namespace cogtrade::neat {

inline constexpr double kSigmoidSlope = 4.9;

double sigmoid(double x) noexcept;

/// Genome compiled into an evaluation plan over enabled connections.
class Network {
 public:
  /// Throws CyclicGenome.
  explicit Network(const Genome& genome);

  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }

  /// Throws ArityMismatch.
  std::vector<double> activate(std::span<const double> inputs) const;

 private:
  struct Incoming {
    std::size_t source;
    double weight;
  };
  struct Step {
    std::size_t slot;
    std::size_t begin;
    std::size_t end;
  };

  std::size_t num_inputs_ = 0;
  std::size_t bias_slot_ = 0;
  std::size_t slot_count_ = 0;
  std::vector<Step> steps_;
  std::vector<Incoming> incoming_;
  std::vector<std::size_t> outputs_;
};

std::vector<double> activate(const Genome& genome, std::span<const double> inputs);

}  // namespace cogtrade::neat
