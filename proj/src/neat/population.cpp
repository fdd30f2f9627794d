#include "cogtrade/neat/population.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "cogtrade/error.hpp"
#include "cogtrade/neat/crossover.hpp"

namespace cogtrade::neat {

namespace {

constexpr std::uint64_t kInitStream = 0xFFFF'FFFF'FFFF'FFFFULL;
constexpr std::uint64_t kRepresentativeStream = 0xFFFF'FFFF'FFFF'FFFEULL;

void require_evaluated(const Population& pop) {
  for (const auto& g : pop.genomes) {
    if (!g.fitness) throw Error(ErrorCode::UnevaluatedParent, "population has unevaluated genomes");
  }
}

// Indices sorted by fitness, best first; earlier index wins ties.
std::vector<std::size_t> ranked(const Population& pop, std::vector<std::size_t> idx) {
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return *pop.genomes[x].fitness > *pop.genomes[y].fitness;
  });
  return idx;
}

}  // namespace

double compatibility_distance(const Genome& a, const Genome& b, const EvolutionConfig& config) {
  const auto& ca = a.connections;
  const auto& cb = b.connections;
  std::size_t i = 0, j = 0, matching = 0, disjoint = 0, excess = 0;
  double weight_diff = 0.0;
  const std::int64_t max_a = a.max_innovation();
  const std::int64_t max_b = b.max_innovation();
  while (i < ca.size() || j < cb.size()) {
    if (i < ca.size() && j < cb.size() && ca[i].innovation == cb[j].innovation) {
      weight_diff += std::abs(ca[i].weight - cb[j].weight);
      ++matching;
      ++i;
      ++j;
    } else if (j == cb.size() || (i < ca.size() && ca[i].innovation < cb[j].innovation)) {
      (ca[i].innovation > max_b ? excess : disjoint) += 1;
      ++i;
    } else {
      (cb[j].innovation > max_a ? excess : disjoint) += 1;
      ++j;
    }
  }
  double n = static_cast<double>(std::max(ca.size(), cb.size()));
  if (ca.size() < 20 && cb.size() < 20) n = 1.0;
  if (n == 0.0) n = 1.0;
  const double w_bar = matching ? weight_diff / static_cast<double>(matching) : 0.0;
  return config.c1 * static_cast<double>(excess) / n + config.c2 * static_cast<double>(disjoint) / n +
         config.c3 * w_bar;
}

Population initial_population(std::size_t inputs, std::size_t outputs,
                              const EvolutionConfig& config) {
  config.validate();
  Population pop;
  const Genome base = Genome::minimal(inputs, outputs);
  pop.tracker = InnovationTracker(0, base.max_node_id() + 1);
  for (std::size_t i = 0; i < config.population; ++i) {
    Rng rng(derive_seed(config.seed, kInitStream, i));
    Genome g = base;
    for (std::size_t k = 0; k < outputs; ++k) {
      for (std::size_t s = 0; s <= inputs; ++s) {
        const int from = static_cast<int>(s);
        const int to = g.output_id(k);
        g.add_connection({pop.tracker.connection(from, to), from, to,
                          uniform(rng, -config.mutation.weight_init, config.mutation.weight_init),
                          true});
      }
    }
    pop.genomes.push_back(std::move(g));
  }
  speciate(pop, config);
  return pop;
}

void speciate(Population& pop, const EvolutionConfig& config) {
  for (auto& s : pop.species) s.members.clear();
  for (std::size_t i = 0; i < pop.genomes.size(); ++i) {
    bool placed = false;
    for (auto& s : pop.species) {
      if (compatibility_distance(pop.genomes[i], s.representative, config) <
          config.compatibility_threshold) {
        s.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      Species s;
      s.id = pop.next_species_id++;
      s.representative = pop.genomes[i];
      s.representative.fitness.reset();
      s.members.push_back(i);
      pop.species.push_back(std::move(s));
    }
  }
  std::erase_if(pop.species, [](const Species& s) { return s.members.empty(); });
}

std::vector<std::size_t> offspring_quotas(const Population& pop, const EvolutionConfig& config) {
  require_evaluated(pop);
  const std::size_t n_species = pop.species.size();
  std::vector<std::size_t> quota(n_species, 0);
  if (n_species == 0) return quota;

  double f_min = std::numeric_limits<double>::infinity();
  for (const auto& s : pop.species) {
    for (std::size_t m : s.members) f_min = std::min(f_min, *pop.genomes[m].fitness);
  }
  std::vector<double> weight(n_species, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < n_species; ++k) {
    const auto& s = pop.species[k];
    double shared = 0.0;
    for (std::size_t m : s.members) shared += (*pop.genomes[m].fitness - f_min);
    weight[k] = shared / static_cast<double>(s.members.size());
    total += weight[k];
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    total = 0.0;
    for (std::size_t k = 0; k < n_species; ++k) {
      weight[k] = static_cast<double>(pop.species[k].members.size());
      total += weight[k];
    }
  }

  const auto target = config.population;
  std::vector<double> remainder(n_species);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < n_species; ++k) {
    const double exact = static_cast<double>(target) * weight[k] / total;
    quota[k] = static_cast<std::size_t>(std::floor(exact));
    remainder[k] = exact - static_cast<double>(quota[k]);
    assigned += quota[k];
  }
  std::vector<std::size_t> order(n_species);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return remainder[x] > remainder[y]; });
  for (std::size_t r = 0; assigned < target; r = (r + 1) % n_species) {
    ++quota[order[r]];
    ++assigned;
  }
  for (std::size_t r = n_species; assigned > target;) {
    r = (r == 0 ? n_species : r) - 1;
    if (quota[order[r]] > 0) {
      --quota[order[r]];
      --assigned;
    }
  }
  return quota;
}

Population next_generation(const Population& current, const EvolutionConfig& config) {
  config.validate();
  require_evaluated(current);
  Population pop = current;

  // Species bookkeeping on the evaluated generation.
  std::vector<std::size_t> all(pop.genomes.size());
  std::iota(all.begin(), all.end(), 0);
  const std::size_t global_best = ranked(pop, all).front();
  for (auto& s : pop.species) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t m : s.members) best = std::max(best, *pop.genomes[m].fitness);
    if (!s.best_fitness || best > *s.best_fitness) {
      s.best_fitness = best;
      s.staleness = 0;
    } else {
      ++s.staleness;
    }
  }
  std::erase_if(pop.species, [&](const Species& s) {
    const bool holds_best =
        std::find(s.members.begin(), s.members.end(), global_best) != s.members.end();
    return s.staleness > config.staleness_limit && !holds_best;
  });

  auto quota = offspring_quotas(pop, config);
  const std::size_t next_gen = pop.generation + 1;
  pop.tracker.new_generation();

  std::vector<Genome> next;
  next.reserve(config.population);
  std::map<std::size_t, std::size_t> species_of;
  for (std::size_t k = 0; k < pop.species.size(); ++k) {
    for (std::size_t m : pop.species[k].members) species_of[m] = k;
  }
  auto take_slot = [&](std::size_t k) {
    if (quota[k] == 0) {
      k = static_cast<std::size_t>(std::max_element(quota.begin(), quota.end()) - quota.begin());
    }
    if (quota[k] > 0) --quota[k];
  };

  std::vector<bool> copied(pop.genomes.size(), false);
  std::vector<std::size_t> survivors;
  for (const auto& [m, k] : species_of) survivors.push_back(m);
  const auto by_rank = ranked(pop, survivors);
  for (std::size_t e = 0; e < config.elitism && e < by_rank.size(); ++e) {
    next.push_back(pop.genomes[by_rank[e]]);
    copied[by_rank[e]] = true;
    take_slot(species_of[by_rank[e]]);
  }
  for (std::size_t k = 0; k < pop.species.size(); ++k) {
    const auto& s = pop.species[k];
    if (s.members.size() < config.species_elitism_min_size || quota[k] == 0) continue;
    const std::size_t champ = ranked(pop, s.members).front();
    if (copied[champ]) continue;
    next.push_back(pop.genomes[champ]);
    copied[champ] = true;
    --quota[k];
  }

  for (std::size_t k = 0; k < pop.species.size(); ++k) {
    auto pool = ranked(pop, pop.species[k].members);
    const auto keep = static_cast<std::size_t>(
        std::ceil(config.survival_threshold * static_cast<double>(pool.size())));
    pool.resize(std::max<std::size_t>(1, std::min(keep, pool.size())));
    for (std::size_t q = 0; q < quota[k]; ++q) {
      Rng rng(derive_seed(config.seed, next_gen, next.size()));
      Genome child;
      if (pool.size() >= 2 && bernoulli(rng, config.crossover_rate)) {
        const std::size_t x = pick_index(rng, pool.size());
        std::size_t y = pick_index(rng, pool.size() - 1);
        if (y >= x) ++y;
        child = crossover(pop.genomes[pool[x]], pop.genomes[pool[y]], rng, config.mutation);
      } else {
        child = pop.genomes[pool[pick_index(rng, pool.size())]];
      }
      child = mutate(child, config.mutation, pop.tracker, rng);
      next.push_back(std::move(child));
    }
  }

  Rng rep_rng(derive_seed(config.seed, next_gen, kRepresentativeStream));
  for (auto& s : pop.species) {
    s.representative = pop.genomes[s.members[pick_index(rep_rng, s.members.size())]];
    s.representative.fitness.reset();
  }
  pop.genomes = std::move(next);
  pop.generation = next_gen;
  speciate(pop, config);
  return pop;
}

void evaluate(Population& pop, const FitnessFn& fitness, std::size_t threads) {
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < pop.genomes.size(); ++i) {
    if (!pop.genomes[i].fitness) todo.push_back(i);
  }
  auto run_one = [&](std::size_t i) {
    const double f = fitness(pop.genomes[i]);
    if (!std::isfinite(f)) throw Error(ErrorCode::InvalidParameter, "fitness must be finite");
    pop.genomes[i].fitness = f;
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, todo.size());
  if (threads <= 1) {
    for (std::size_t i : todo) run_one(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < todo.size();) {
        try {
          run_one(todo[k]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

EvolutionResult evolve(std::size_t inputs, std::size_t outputs, const EvolutionConfig& config,
                       const FitnessFn& fitness) {
  Population pop = initial_population(inputs, outputs, config);
  EvolutionResult result;
  std::optional<double> best_seen;
  for (std::size_t gen = 0;; ++gen) {
    evaluate(pop, fitness, config.threads);
    GenerationStats stats;
    stats.generation = gen;
    stats.species = pop.species.size();
    stats.best = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < pop.genomes.size(); ++i) {
      const double f = *pop.genomes[i].fitness;
      sum += f;
      if (f > stats.best) {
        stats.best = f;
        best_idx = i;
      }
    }
    stats.mean = sum / static_cast<double>(pop.genomes.size());
    result.history.push_back(stats);
    if (!best_seen || stats.best > *best_seen) {
      best_seen = stats.best;
      result.best = pop.genomes[best_idx];
    }
    if (config.fitness_threshold && *best_seen >= *config.fitness_threshold) {
      result.reached_threshold = true;
      break;
    }
    if (gen == config.max_generations) break;
    pop = next_generation(pop, config);
  }
  return result;
}

}  // namespace cogtrade::neat
