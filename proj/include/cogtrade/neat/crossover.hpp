#pragma once

#include "cogtrade/neat/config.hpp"
#include "cogtrade/neat/genome.hpp"
#include "cogtrade/random.hpp"

namespace cogtrade::neat {

/// Matching genes come from either parent at random; disjoint and excess
/// genes come from the fitter parent (picked at random on a tie), so the
/// child has the fitter parent's topology. Throws UnevaluatedParent.
Genome crossover(const Genome& a, const Genome& b, Rng& rng, const MutationRates& rates = {});

}  // namespace cogtrade::neat
