#include "cogtrade/neat/mutation.hpp"

#include <algorithm>
#include <vector>

namespace cogtrade::neat {

std::int64_t InnovationTracker::connection(int from, int to) {
  auto [it, inserted] = connections_.try_emplace({from, to}, next_innovation_);
  if (inserted) ++next_innovation_;
  return it->second;
}

InnovationTracker::Split InnovationTracker::split(const Genome& genome, const ConnectionGene& conn) {
  auto it = splits_.find(conn.innovation);
  if (it != splits_.end() && !genome.has_node(it->second.node)) return it->second;
  Split s;
  s.node = next_node_++;
  s.in_innovation = next_innovation_++;
  s.out_innovation = next_innovation_++;
  if (it == splits_.end()) splits_.emplace(conn.innovation, s);
  return s;
}

void InnovationTracker::new_generation() {
  connections_.clear();
  splits_.clear();
}

void InnovationTracker::reserve(const Genome& genome) {
  next_node_ = std::max(next_node_, genome.max_node_id() + 1);
  next_innovation_ = std::max(next_innovation_, genome.max_innovation() + 1);
}

void mutate_weights(Genome& genome, const MutationRates& rates, Rng& rng) {
  for (auto& c : genome.connections) {
    if (bernoulli(rng, rates.weight_reset)) {
      c.weight = uniform(rng, -rates.weight_init, rates.weight_init);
    } else {
      c.weight += uniform(rng, -rates.weight_step, rates.weight_step);
    }
  }
}

bool mutate_add_connection(Genome& genome, const MutationRates& rates, InnovationTracker& tracker,
                           Rng& rng) {
  std::vector<std::pair<int, int>> legal;
  for (const auto& src : genome.nodes) {
    for (const auto& dst : genome.nodes) {
      if (dst.kind == NodeKind::Input || dst.kind == NodeKind::Bias) continue;
      if (src.id == dst.id || genome.find_connection(src.id, dst.id)) continue;
      if (creates_cycle(genome, src.id, dst.id)) continue;
      legal.emplace_back(src.id, dst.id);
    }
  }
  if (legal.empty()) return false;
  const auto [from, to] = legal[pick_index(rng, legal.size())];
  genome.add_connection({tracker.connection(from, to), from, to,
                         uniform(rng, -rates.weight_init, rates.weight_init), true});
  return true;
}

bool mutate_add_node(Genome& genome, InnovationTracker& tracker, Rng& rng) {
  std::vector<std::size_t> enabled;
  for (std::size_t i = 0; i < genome.connections.size(); ++i) {
    if (genome.connections[i].enabled) enabled.push_back(i);
  }
  if (enabled.empty()) return false;
  auto& old = genome.connections[enabled[pick_index(rng, enabled.size())]];
  old.enabled = false;
  const ConnectionGene split_conn = old;
  const auto ids = tracker.split(genome, split_conn);
  genome.add_node({ids.node, NodeKind::Hidden});
  genome.add_connection({ids.in_innovation, split_conn.from, ids.node, 1.0, true});
  genome.add_connection({ids.out_innovation, ids.node, split_conn.to, split_conn.weight, true});
  return true;
}

Genome mutate(const Genome& genome, const MutationRates& rates, InnovationTracker& tracker,
              Rng& rng, MutationReport* report) {
  Genome child = genome;
  child.fitness.reset();
  MutationReport r;
  if (bernoulli(rng, rates.add_node)) r.added_node = mutate_add_node(child, tracker, rng);
  if (bernoulli(rng, rates.add_connection)) {
    r.added_connection = mutate_add_connection(child, rates, tracker, rng);
    r.saturated = !r.added_connection;
  }
  if (bernoulli(rng, rates.weight)) {
    mutate_weights(child, rates, rng);
    r.weights = !child.connections.empty();
  }
  if (report) *report = r;
  return child;
}

}  // namespace cogtrade::neat
