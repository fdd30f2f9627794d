#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cogtrade::neat {

enum class NodeKind { Input, Bias, Output, Hidden };

/// Inputs and bias pass their value through; hidden and output nodes apply
/// the steepened logistic sigmoid.
enum class Activation { Identity, Sigmoid };

struct NodeGene {
  int id = 0;
  NodeKind kind = NodeKind::Hidden;

  Activation activation() const noexcept {
    return kind == NodeKind::Input || kind == NodeKind::Bias ? Activation::Identity
                                                             : Activation::Sigmoid;
  }
  bool operator==(const NodeGene&) const = default;
};

struct ConnectionGene {
  std::int64_t innovation = 0;
  int from = 0;
  int to = 0;
  double weight = 0.0;
  bool enabled = true;

  bool operator==(const ConnectionGene&) const = default;
};

/// Node ids: inputs 0..I-1, bias I, outputs I+1..I+O, hidden nodes above.
/// Nodes are kept sorted by id and connections by innovation.
struct Genome {
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  std::vector<NodeGene> nodes;
  std::vector<ConnectionGene> connections;
  std::optional<double> fitness;

  /// Inputs, bias and outputs with no connections.
  static Genome minimal(std::size_t inputs, std::size_t outputs);

  int bias_id() const noexcept { return static_cast<int>(num_inputs); }
  int output_id(std::size_t k) const noexcept { return static_cast<int>(num_inputs + 1 + k); }

  const NodeGene* find_node(int id) const;
  bool has_node(int id) const { return find_node(id) != nullptr; }
  const ConnectionGene* find_connection(int from, int to) const;
  int max_node_id() const;
  std::int64_t max_innovation() const;
  std::size_t hidden_count() const;
  std::size_t enabled_count() const;

  void add_node(NodeGene node);
  void add_connection(ConnectionGene conn);

  /// Same nodes and connections, fitness ignored.
  bool same_structure(const Genome& other) const;
  bool operator==(const Genome&) const = default;
};

/// True if adding from->to would close a directed cycle over all connections.
bool creates_cycle(const Genome& genome, int from, int to);

/// Acyclicity is checked over every connection, enabled or not, so that
/// re-enabling a gene can never introduce a cycle.
bool is_acyclic(const Genome& genome);

/// Every output has an enabled path from some input or the bias.
bool outputs_reachable(const Genome& genome);

/// Checks node layout, unique ids and (from,to) pairs, endpoint validity and
/// acyclicity. Throws MalformedGenome or CyclicGenome.
void validate(const Genome& genome);

/// Throws CyclicGenome. Order covers all nodes.
std::vector<int> topological_order(const Genome& genome);

}  // namespace cogtrade::neat
