#include "cogtrade/neat/network.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "cogtrade/error.hpp"

namespace cogtrade::neat {

double sigmoid(double x) noexcept { return 1.0 / (1.0 + std::exp(-kSigmoidSlope * x)); }

Network::Network(const Genome& genome) : num_inputs_(genome.num_inputs) {
  const auto order = topological_order(genome);
  std::unordered_map<int, std::size_t> slot;
  for (std::size_t i = 0; i < genome.nodes.size(); ++i) slot[genome.nodes[i].id] = i;
  slot_count_ = genome.nodes.size();
  bias_slot_ = slot.at(genome.bias_id());

  std::unordered_map<int, std::vector<Incoming>> incoming;
  for (const auto& c : genome.connections) {
    if (c.enabled) incoming[c.to].push_back({slot.at(c.from), c.weight});
  }
  for (int id : order) {
    const auto* node = genome.find_node(id);
    if (node->activation() == Activation::Identity) continue;
    const std::size_t begin = incoming_.size();
    for (const auto& in : incoming[id]) incoming_.push_back(in);
    steps_.push_back({slot.at(id), begin, incoming_.size()});
  }
  for (std::size_t k = 0; k < genome.num_outputs; ++k) outputs_.push_back(slot.at(genome.output_id(k)));
}

std::vector<double> Network::activate(std::span<const double> inputs) const {
  if (inputs.size() != num_inputs_) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(num_inputs_) +
                                              " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<double> value(slot_count_, 0.0);
  for (std::size_t i = 0; i < num_inputs_; ++i) value[i] = inputs[i];
  value[bias_slot_] = 1.0;
  for (const auto& step : steps_) {
    double sum = 0.0;
    for (std::size_t j = step.begin; j < step.end; ++j) {
      sum += incoming_[j].weight * value[incoming_[j].source];
    }
    value[step.slot] = sigmoid(sum);
  }
  std::vector<double> out;
  out.reserve(outputs_.size());
  for (std::size_t s : outputs_) out.push_back(value[s]);
  return out;
}

std::vector<double> activate(const Genome& genome, std::span<const double> inputs) {
  return Network(genome).activate(inputs);
}

}  // namespace cogtrade::neat
