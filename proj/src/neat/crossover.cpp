#include "cogtrade/neat/crossover.hpp"

#include <map>

#include "cogtrade/error.hpp"

namespace cogtrade::neat {

Genome crossover(const Genome& a, const Genome& b, Rng& rng, const MutationRates& rates) {
  if (!a.fitness || !b.fitness) {
    throw Error(ErrorCode::UnevaluatedParent, "crossover parents must both be evaluated");
  }
  bool a_fitter = *a.fitness > *b.fitness;
  if (*a.fitness == *b.fitness) a_fitter = bernoulli(rng, 0.5);
  const Genome& fit = a_fitter ? a : b;
  const Genome& other = a_fitter ? b : a;

  std::map<std::int64_t, const ConnectionGene*> other_genes;
  for (const auto& c : other.connections) other_genes[c.innovation] = &c;

  Genome child;
  child.num_inputs = fit.num_inputs;
  child.num_outputs = fit.num_outputs;
  child.nodes = fit.nodes;
  child.connections.reserve(fit.connections.size());
  for (const auto& c : fit.connections) {
    ConnectionGene gene = c;
    auto it = other_genes.find(c.innovation);
    // Matching innovations share endpoints only when both parents made the
    // same structural change; anything else is treated as disjoint.
    if (it != other_genes.end() && it->second->from == c.from && it->second->to == c.to) {
      const ConnectionGene& o = *it->second;
      if (bernoulli(rng, 0.5)) gene.weight = o.weight;
      if (c.enabled != o.enabled) gene.enabled = bernoulli(rng, rates.reenable);
    }
    child.connections.push_back(gene);
  }
  return child;
}

}  // namespace cogtrade::neat
