#include "cogtrade/neat/genome.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cogtrade/error.hpp"
#include "cogtrade/neat/config.hpp"

namespace cogtrade::neat {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

void EvolutionConfig::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
  if (population < 2) fail("population must be at least 2");
  for (double r : {mutation.weight, mutation.weight_reset, mutation.add_connection,
                   mutation.add_node, mutation.reenable, crossover_rate}) {
    if (!in_unit(r)) fail("rates must lie in [0,1]");
  }
  if (!(survival_threshold > 0.0 && survival_threshold <= 1.0)) {
    fail("survival_threshold must lie in (0,1]");
  }
  if (!(mutation.weight_step >= 0.0) || !(mutation.weight_init > 0.0)) {
    fail("weight step must be non-negative and init range positive");
  }
  for (double c : {c1, c2, c3}) {
    if (!(c >= 0.0) || c > 1e300) fail("compatibility coefficients must be finite and >= 0");
  }
  if (!(compatibility_threshold > 0.0) || compatibility_threshold > 1e300) {
    fail("compatibility threshold must be positive");
  }
  if (elitism > population) fail("elitism exceeds population");
}

Genome Genome::minimal(std::size_t inputs, std::size_t outputs) {
  if (inputs == 0 || outputs == 0) {
    throw Error(ErrorCode::InvalidConfig, "a genome needs at least one input and one output");
  }
  Genome g;
  g.num_inputs = inputs;
  g.num_outputs = outputs;
  for (std::size_t i = 0; i < inputs; ++i) g.nodes.push_back({static_cast<int>(i), NodeKind::Input});
  g.nodes.push_back({g.bias_id(), NodeKind::Bias});
  for (std::size_t k = 0; k < outputs; ++k) g.nodes.push_back({g.output_id(k), NodeKind::Output});
  return g;
}

const NodeGene* Genome::find_node(int id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                             [](const NodeGene& n, int v) { return n.id < v; });
  return it != nodes.end() && it->id == id ? &*it : nullptr;
}

const ConnectionGene* Genome::find_connection(int from, int to) const {
  for (const auto& c : connections) {
    if (c.from == from && c.to == to) return &c;
  }
  return nullptr;
}

int Genome::max_node_id() const { return nodes.empty() ? -1 : nodes.back().id; }

std::int64_t Genome::max_innovation() const {
  return connections.empty() ? -1 : connections.back().innovation;
}

std::size_t Genome::hidden_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes.begin(), nodes.end(), [](const NodeGene& n) { return n.kind == NodeKind::Hidden; }));
}

std::size_t Genome::enabled_count() const {
  return static_cast<std::size_t>(std::count_if(
      connections.begin(), connections.end(), [](const ConnectionGene& c) { return c.enabled; }));
}

void Genome::add_node(NodeGene node) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node.id,
                             [](const NodeGene& n, int v) { return n.id < v; });
  nodes.insert(it, node);
}

void Genome::add_connection(ConnectionGene conn) {
  auto it = std::upper_bound(
      connections.begin(), connections.end(), conn.innovation,
      [](std::int64_t v, const ConnectionGene& c) { return v < c.innovation; });
  connections.insert(it, conn);
}

bool Genome::same_structure(const Genome& other) const {
  return num_inputs == other.num_inputs && num_outputs == other.num_outputs &&
         nodes == other.nodes && connections == other.connections;
}

bool creates_cycle(const Genome& genome, int from, int to) {
  if (from == to) return true;
  // A cycle appears iff `from` is already reachable from `to`.
  std::map<int, std::vector<int>> adj;
  for (const auto& c : genome.connections) adj[c.from].push_back(c.to);
  std::vector<int> stack{to};
  std::set<int> seen{to};
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    if (n == from) return true;
    auto it = adj.find(n);
    if (it == adj.end()) continue;
    for (int m : it->second) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }
  return false;
}

namespace {

std::optional<std::vector<int>> kahn(const Genome& genome, bool enabled_only) {
  std::map<int, std::size_t> indegree;
  std::map<int, std::vector<int>> adj;
  for (const auto& n : genome.nodes) indegree[n.id] = 0;
  for (const auto& c : genome.connections) {
    if (enabled_only && !c.enabled) continue;
    adj[c.from].push_back(c.to);
    ++indegree[c.to];
  }
  std::vector<int> ready;
  for (auto it = indegree.rbegin(); it != indegree.rend(); ++it) {
    if (it->second == 0) ready.push_back(it->first);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int n = ready.back();
    ready.pop_back();
    order.push_back(n);
    for (int m : adj[n]) {
      if (--indegree[m] == 0) ready.push_back(m);
    }
  }
  if (order.size() != indegree.size()) return std::nullopt;
  return order;
}

}  // namespace

bool is_acyclic(const Genome& genome) { return kahn(genome, false).has_value(); }

std::vector<int> topological_order(const Genome& genome) {
  auto order = kahn(genome, true);
  if (!order) throw Error(ErrorCode::CyclicGenome, "genome contains a cycle");
  return *order;
}

bool outputs_reachable(const Genome& genome) {
  std::map<int, std::vector<int>> adj;
  for (const auto& c : genome.connections) {
    if (c.enabled) adj[c.from].push_back(c.to);
  }
  std::set<int> seen;
  std::vector<int> stack;
  for (std::size_t i = 0; i <= genome.num_inputs; ++i) {
    stack.push_back(static_cast<int>(i));
    seen.insert(static_cast<int>(i));
  }
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    for (int m : adj[n]) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }
  for (std::size_t k = 0; k < genome.num_outputs; ++k) {
    if (!seen.count(genome.output_id(k))) return false;
  }
  return true;
}

void validate(const Genome& g) {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::MalformedGenome, msg); };
  if (g.num_inputs == 0 || g.num_outputs == 0) bad("genome needs inputs and outputs");
  const std::size_t fixed = g.num_inputs + 1 + g.num_outputs;
  if (g.nodes.size() < fixed) bad("missing input, bias or output nodes");
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (i > 0 && g.nodes[i - 1].id >= n.id) bad("node ids must be unique and sorted");
    NodeKind expected = NodeKind::Hidden;
    if (i < g.num_inputs) {
      expected = NodeKind::Input;
    } else if (i == g.num_inputs) {
      expected = NodeKind::Bias;
    } else if (i < fixed) {
      expected = NodeKind::Output;
    }
    if (i < fixed && n.id != static_cast<int>(i)) bad("fixed node ids must be contiguous");
    if (n.kind != expected) bad("node " + std::to_string(n.id) + " has the wrong kind");
  }
  std::set<std::pair<int, int>> pairs;
  std::set<std::int64_t> innovations;
  for (std::size_t i = 0; i < g.connections.size(); ++i) {
    const auto& c = g.connections[i];
    if (i > 0 && g.connections[i - 1].innovation > c.innovation) bad("connections out of order");
    if (!innovations.insert(c.innovation).second) bad("duplicate innovation number");
    if (!pairs.insert({c.from, c.to}).second) bad("duplicate connection pair");
    const auto* from = g.find_node(c.from);
    const auto* to = g.find_node(c.to);
    if (!from || !to) bad("connection references an undeclared node");
    if (to->kind == NodeKind::Input || to->kind == NodeKind::Bias) {
      bad("connection into an input or bias node");
    }
    if (!(c.weight > -1e300 && c.weight < 1e300)) bad("non-finite weight");
  }
  if (!is_acyclic(g)) throw Error(ErrorCode::CyclicGenome, "genome contains a cycle");
}

}  // namespace cogtrade::neat
