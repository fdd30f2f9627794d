#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "cogtrade/neat/config.hpp"
#include "cogtrade/neat/genome.hpp"
#include "cogtrade/random.hpp"

namespace cogtrade::neat {

/// Hands out innovation numbers and hidden node ids for one run. Within a
/// generation the same structural event gets the same numbers; counters
/// never go backwards.
class InnovationTracker {
 public:
  InnovationTracker() = default;
  InnovationTracker(std::int64_t next_innovation, int next_node_id)
      : next_innovation_(next_innovation), next_node_(next_node_id) {}

  struct Split {
    int node = 0;
    std::int64_t in_innovation = 0;
    std::int64_t out_innovation = 0;
  };

  std::int64_t connection(int from, int to);
  /// Ids for splitting the connection with the given innovation. If the
  /// cached node id is already taken in `genome`, fresh ids are issued.
  Split split(const Genome& genome, const ConnectionGene& conn);

  void new_generation();
  std::int64_t next_innovation() const noexcept { return next_innovation_; }
  int next_node_id() const noexcept { return next_node_; }
  /// Make sure ids issued later do not collide with `genome`.
  void reserve(const Genome& genome);

 private:
  std::int64_t next_innovation_ = 0;
  int next_node_ = 0;
  std::map<std::pair<int, int>, std::int64_t> connections_;
  std::map<std::int64_t, Split> splits_;
};

struct MutationReport {
  bool weights = false;
  bool added_connection = false;
  bool added_node = false;
  /// An add-connection draw found no legal pair; the step was a no-op.
  bool saturated = false;
};

Genome mutate(const Genome& genome, const MutationRates& rates, InnovationTracker& tracker,
              Rng& rng, MutationReport* report = nullptr);

// Individual operators, exposed for tests. Each returns false when it could
// not apply.
void mutate_weights(Genome& genome, const MutationRates& rates, Rng& rng);
bool mutate_add_connection(Genome& genome, const MutationRates& rates, InnovationTracker& tracker,
                           Rng& rng);
bool mutate_add_node(Genome& genome, InnovationTracker& tracker, Rng& rng);

}  // namespace cogtrade::neat
