#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cogtrade/error.hpp"
#include "cogtrade/neat/crossover.hpp"
#include "cogtrade/neat/genome_io.hpp"
#include "cogtrade/neat/mutation.hpp"
#include "cogtrade/neat/network.hpp"
#include "cogtrade/neat/population.hpp"
#include "neat_oracles.hpp"

namespace cogtrade::neat {
namespace {

using testing::random_genome;

Genome one_edge(double w) {
  Genome g = Genome::minimal(1, 1);
  g.add_connection({0, 0, 2, w, true});
  return g;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::IoError;
}

TEST(Activate, NoConnectionsGivesHalf) {
  const auto out = activate(Genome::minimal(3, 2), std::vector<double>{1.0, -2.0, 5.0});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], 0.5);
  EXPECT_EQ(out[1], 0.5);
}

TEST(Activate, SingleEdge) {
  for (double w : {-1.5, 0.0, 0.3, 2.0}) {
    for (double x : {-1.0, 0.0, 0.7}) {
      const auto out = activate(one_edge(w), std::vector<double>{x});
      EXPECT_NEAR(out[0], 1.0 / (1.0 + std::exp(-4.9 * w * x)), 1e-15);
    }
  }
}

TEST(Activate, MatchesRecursiveEvaluator) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> in(-3.0, 3.0);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_genome(seed, 1 + seed % 5, 1 + seed % 3, seed % 9, 0.45);
    const Network net(g);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> x(g.num_inputs);
      for (auto& v : x) v = in(rng);
      const auto got = net.activate(x);
      const auto want = testing::oracle::activate(g, x);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        ASSERT_NEAR(got[k], want[k], 1e-12) << "seed " << seed;
        ASSERT_GE(got[k], 0.0);
        ASSERT_LE(got[k], 1.0);
      }
    }
  }
}

TEST(Activate, Errors) {
  EXPECT_EQ(code_of([] { activate(one_edge(1.0), std::vector<double>{1.0, 2.0}); }),
            ErrorCode::ArityMismatch);
  Genome cyclic = Genome::minimal(1, 1);
  cyclic.add_node({3, NodeKind::Hidden});
  cyclic.add_connection({0, 2, 3, 1.0, true});
  cyclic.add_connection({1, 3, 2, 1.0, true});
  EXPECT_FALSE(is_acyclic(cyclic));
  EXPECT_EQ(code_of([&] { activate(cyclic, std::vector<double>{1.0}); }), ErrorCode::CyclicGenome);
  EXPECT_EQ(code_of([&] { validate(cyclic); }), ErrorCode::CyclicGenome);
}

TEST(Distance, IdentityAndUniformWeightShift) {
  EvolutionConfig cfg;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_genome(seed, 3, 2, seed % 6, 0.5);
    EXPECT_EQ(compatibility_distance(g, g, cfg), 0.0);
    Genome shifted = g;
    for (auto& c : shifted.connections) c.weight += 0.75;
    if (!g.connections.empty()) {
      EXPECT_NEAR(compatibility_distance(g, shifted, cfg), cfg.c3 * 0.75, 1e-12);
    }
  }
}

TEST(Distance, MatchesAlignmentOracle) {
  EvolutionConfig cfg;
  cfg.c1 = 1.3;
  cfg.c2 = 0.7;
  cfg.c3 = 0.4;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    // Dense genomes cross the 20-gene normalization boundary.
    const auto a = random_genome(seed, 4, 2, seed % 12, 0.3 + 0.05 * (seed % 10));
    const auto b = random_genome(seed + 7919, 4, 2, (seed / 3) % 12, 0.3 + 0.05 * (seed % 7));
    const double d = compatibility_distance(a, b, cfg);
    ASSERT_NEAR(d, testing::oracle::distance(a, b, cfg), 1e-12) << "seed " << seed;
    ASSERT_NEAR(d, compatibility_distance(b, a, cfg), 1e-12);
  }
}

TEST(Mutate, ZeroRatesLeaveGenomeUnchanged) {
  MutationRates zero{0.0, 0.5, 0.0, 1.0, 0.0, 0.0, 0.25};
  InnovationTracker tracker(10000, 10000);
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_genome(seed, 3, 2, 4, 0.5);
    EXPECT_TRUE(mutate(g, zero, tracker, rng).same_structure(g));
  }
}

TEST(Mutate, AddNodeSplitsSingleConnection) {
  Genome g = one_edge(0.8);
  InnovationTracker tracker(1, 3);
  Rng rng(2);
  ASSERT_TRUE(mutate_add_node(g, tracker, rng));
  EXPECT_EQ(g.nodes.size(), 4u);
  ASSERT_EQ(g.connections.size(), 3u);
  EXPECT_EQ(g.enabled_count(), 2u);
  EXPECT_FALSE(g.connections[0].enabled);
  const auto* in = g.find_connection(0, 3);
  const auto* out = g.find_connection(3, 2);
  ASSERT_TRUE(in && out);
  EXPECT_EQ(in->weight, 1.0);
  EXPECT_EQ(out->weight, 0.8);
}

TEST(Mutate, SaturatedTopologyIsNoOp) {
  Genome g = Genome::minimal(1, 1);
  g.add_connection({0, 0, 2, 1.0, true});
  g.add_connection({1, 1, 2, 1.0, true});
  InnovationTracker tracker(2, 3);
  Rng rng(3);
  MutationRates rates;
  rates.weight = 0.0;
  rates.add_node = 0.0;
  rates.add_connection = 1.0;
  MutationReport report;
  const auto child = mutate(g, rates, tracker, rng, &report);
  EXPECT_TRUE(report.saturated);
  EXPECT_TRUE(child.same_structure(g));
}

TEST(Mutate, FuzzPreservesInvariantsAndInnovationsGrow) {
  MutationRates rates;
  rates.add_connection = 0.5;
  rates.add_node = 0.3;
  InnovationTracker tracker(100000, 100000);
  std::int64_t highest = -1;
  std::set<std::pair<int, int>> seen_this_generation;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    if (seed % 100 == 0) tracker.new_generation();
    Rng rng(seed);
    const auto parent = random_genome(seed % 97, 2 + seed % 3, 1 + seed % 2, seed % 5, 0.4);
    tracker.reserve(parent);
    const auto child = mutate(parent, rates, tracker, rng);
    ASSERT_NO_THROW(validate(child)) << "seed " << seed;
    std::set<std::int64_t> before;
    for (const auto& c : parent.connections) before.insert(c.innovation);
    for (const auto& c : child.connections) {
      if (before.count(c.innovation)) continue;
      // A fresh gene is either a newly issued number or a repeat of an event
      // already seen in this generation.
      ASSERT_TRUE(c.innovation > highest || c.innovation >= 100000);
      highest = std::max(highest, c.innovation);
    }
    ASSERT_LT(highest, tracker.next_innovation());
  }
}

TEST(Innovation, SameEventSameNumberWithinGeneration) {
  InnovationTracker tracker(0, 10);
  const auto a = tracker.connection(0, 5);
  EXPECT_EQ(tracker.connection(0, 5), a);
  const auto b = tracker.connection(1, 5);
  EXPECT_NE(a, b);
  tracker.new_generation();
  const auto c = tracker.connection(0, 5);
  EXPECT_GT(c, b);

  Genome g = one_edge(1.0);
  Genome h = one_edge(-1.0);
  InnovationTracker split_tracker(1, 3);
  const auto s1 = split_tracker.split(g, g.connections[0]);
  const auto s2 = split_tracker.split(h, h.connections[0]);
  EXPECT_EQ(s1.node, s2.node);
  EXPECT_EQ(s1.in_innovation, s2.in_innovation);
  h.add_node({s2.node, NodeKind::Hidden});
  const auto s3 = split_tracker.split(h, h.connections[0]);
  EXPECT_NE(s3.node, s2.node);
}

TEST(Crossover, SelfCrossIsIdentity) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_genome(seed, 3, 2, seed % 5, 0.5);
    g.fitness = 1.0;
    Rng rng(seed);
    EXPECT_TRUE(crossover(g, g, rng).same_structure(g));
  }
}

TEST(Crossover, RequiresEvaluatedParents) {
  auto a = one_edge(1.0);
  auto b = one_edge(2.0);
  a.fitness = 1.0;
  Rng rng(0);
  EXPECT_EQ(code_of([&] { crossover(a, b, rng); }), ErrorCode::UnevaluatedParent);
}

TEST(Crossover, FitterSupersetDeterminesTopology) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto big = random_genome(seed, 3, 2, 5, 0.6, 0.0);
    auto small = big;
    small.connections.resize(small.connections.size() / 2);
    for (auto& c : small.connections) c.weight = -c.weight;
    big.fitness = 2.0;
    small.fitness = 1.0;
    Rng rng(seed);
    const auto child = crossover(small, big, rng);
    ASSERT_EQ(child.connections.size(), big.connections.size());
    for (std::size_t i = 0; i < child.connections.size(); ++i) {
      EXPECT_EQ(child.connections[i].innovation, big.connections[i].innovation);
      const double w = child.connections[i].weight;
      const auto* s = small.find_connection(child.connections[i].from, child.connections[i].to);
      EXPECT_TRUE(w == big.connections[i].weight || (s && w == s->weight));
    }
    EXPECT_EQ(child.nodes, big.nodes);
  }
}

TEST(Crossover, FuzzPreservesInvariants) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    auto a = random_genome(seed, 3, 2, seed % 7, 0.5);
    auto b = random_genome(seed * 31 + 1, 3, 2, seed % 5, 0.5);
    a.fitness = static_cast<double>(seed % 3);
    b.fitness = static_cast<double>(seed % 2);
    Rng rng(seed);
    const auto child = crossover(a, b, rng);
    ASSERT_NO_THROW(validate(child));
    const auto& fitter = *a.fitness > *b.fitness ? a : b;
    if (*a.fitness != *b.fitness) {
      EXPECT_EQ(child.connections.size(), fitter.connections.size());
    }
  }
}

TEST(Population, ClonesFormOneSpecies) {
  EvolutionConfig cfg;
  cfg.population = 20;
  Population pop;
  for (int i = 0; i < 20; ++i) pop.genomes.push_back(random_genome(4, 3, 2, 3, 0.5));
  speciate(pop, cfg);
  EXPECT_EQ(pop.species.size(), 1u);
}

TEST(Population, SpeciationMatchesThresholdScan) {
  EvolutionConfig cfg;
  cfg.compatibility_threshold = 1.2;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Population pop;
    for (std::uint64_t i = 0; i < 40; ++i) {
      pop.genomes.push_back(random_genome(trial * 100 + i % 13, 3, 2, i % 4, 0.5));
    }
    speciate(pop, cfg);
    std::vector<int> species_of(pop.genomes.size(), -1);
    for (std::size_t k = 0; k < pop.species.size(); ++k) {
      for (std::size_t m : pop.species[k].members) species_of[m] = static_cast<int>(k);
    }
    // Replay: each genome belongs to the first species whose representative
    // is within the threshold, or founded the species it is in.
    for (std::size_t i = 0; i < pop.genomes.size(); ++i) {
      ASSERT_GE(species_of[i], 0);
      int expected = -1;
      for (std::size_t k = 0; k < pop.species.size(); ++k) {
        const auto& rep = pop.species[k].representative;
        const bool founded_before = pop.species[k].members.front() < i;
        const bool is_founder = pop.species[k].members.front() == i;
        if (is_founder) {
          expected = static_cast<int>(k);
          break;
        }
        if (founded_before && testing::oracle::distance(pop.genomes[i], rep, cfg) < 1.2) {
          expected = static_cast<int>(k);
          break;
        }
      }
      EXPECT_EQ(species_of[i], expected) << "genome " << i;
      EXPECT_LT(testing::oracle::distance(pop.genomes[i], pop.species[species_of[i]].representative, cfg),
                1.2);
    }
  }
}

TEST(Population, QuotasSumToPopulationSize) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EvolutionConfig cfg;
    cfg.population = 17 + seed * 7;
    cfg.seed = seed;
    cfg.compatibility_threshold = 0.5 + 0.1 * static_cast<double>(seed % 5);
    auto pop = initial_population(3, 2, cfg);
    Rng rng(seed);
    for (auto& g : pop.genomes) g.fitness = uniform(rng, -5.0, 5.0);
    const auto quotas = offspring_quotas(pop, cfg);
    std::size_t total = 0;
    for (auto q : quotas) total += q;
    EXPECT_EQ(total, cfg.population);
    auto next = next_generation(pop, cfg);
    EXPECT_EQ(next.genomes.size(), cfg.population);
    for (const auto& g : next.genomes) {
      ASSERT_NO_THROW(validate(g));
    }
  }
}

TEST(Population, NextGenerationRequiresFitness) {
  EvolutionConfig cfg;
  cfg.population = 10;
  auto pop = initial_population(2, 1, cfg);
  EXPECT_EQ(code_of([&] { next_generation(pop, cfg); }), ErrorCode::UnevaluatedParent);
}

TEST(Evolve, ElitismKeepsBestNonDecreasing) {
  EvolutionConfig cfg;
  cfg.population = 60;
  cfg.max_generations = 40;
  cfg.seed = 9;
  const auto result = evolve(2, 1, cfg, testing::xor_fitness);
  ASSERT_EQ(result.history.size(), 41u);
  for (std::size_t g = 1; g < result.history.size(); ++g) {
    EXPECT_GE(result.history[g].best, result.history[g - 1].best);
  }
  EXPECT_EQ(*result.best.fitness, result.history.back().best);
}

TEST(Evolve, ZeroGenerationsReturnsInitialBest) {
  EvolutionConfig cfg;
  cfg.population = 30;
  cfg.max_generations = 0;
  cfg.seed = 4;
  const auto result = evolve(2, 1, cfg, testing::xor_fitness);
  ASSERT_EQ(result.history.size(), 1u);
  auto pop = initial_population(2, 1, cfg);
  double best = -1e9;
  for (const auto& g : pop.genomes) best = std::max(best, testing::xor_fitness(g));
  EXPECT_EQ(*result.best.fitness, best);
}

TEST(Evolve, SeededRunsAreBitIdentical) {
  EvolutionConfig cfg;
  cfg.population = 50;
  cfg.max_generations = 25;
  cfg.seed = 21;
  const auto a = evolve(2, 1, cfg, testing::xor_fitness);
  cfg.threads = 3;
  const auto b = evolve(2, 1, cfg, testing::xor_fitness);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t g = 0; g < a.history.size(); ++g) {
    EXPECT_EQ(a.history[g].best, b.history[g].best);
    EXPECT_EQ(a.history[g].mean, b.history[g].mean);
  }
  EXPECT_EQ(a.best, b.best);
}

TEST(Evolve, RejectsBadConfig) {
  EvolutionConfig cfg;
  cfg.population = 1;
  EXPECT_EQ(code_of([&] { evolve(2, 1, cfg, testing::xor_fitness); }), ErrorCode::InvalidConfig);
  cfg.population = 10;
  cfg.crossover_rate = 1.5;
  EXPECT_EQ(code_of([&] { evolve(2, 1, cfg, testing::xor_fitness); }), ErrorCode::InvalidConfig);
}

TEST(GenomeIo, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_genome(seed, 4, 3, seed % 6, 0.5);
    if (seed % 2) g.fitness = 0.1 * static_cast<double>(seed) - 1.7;
    const auto text = genome_to_text(g);
    const auto back = genome_from_text(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(genome_to_text(back), text);
  }
}

TEST(GenomeIo, ReportsOffendingLine) {
  const std::string text = "genome 1 1\nnode 0 input\nnode 1 bias\nnode 2 output\nconn 0 0 2 x 1\n";
  try {
    genome_from_text(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedGenome);
    EXPECT_EQ(e.line(), 5u);
  }
  EXPECT_EQ(code_of([] { genome_from_text("node 0 input\n"); }), ErrorCode::MalformedGenome);
  EXPECT_EQ(code_of([] {
              genome_from_text(
                  "genome 1 1\nnode 0 input\nnode 1 bias\nnode 2 output\nnode 3 hidden\n"
                  "conn 0 2 3 1 1\nconn 1 3 2 1 1\n");
            }),
            ErrorCode::CyclicGenome);
}

}  // namespace
}  // namespace cogtrade::neat
