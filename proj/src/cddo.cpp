#include "cddohs/cddo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cddohs {

std::size_t CddoParams::resolved_pm_size(std::size_t pop_size) const {
  if (pm_size != 0) return pm_size;
  return static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(pop_size)));
}

void CddoParams::validate(std::size_t pop_size) const {
  const std::size_t pm = resolved_pm_size(pop_size);
  if (pm == 0 || pm > pop_size) throw std::invalid_argument("pm_size must be in [1, pop_size]");
  auto in_unit = [](const Interval& i) { return i.lo >= 0.0 && i.hi <= 1.0 && i.lo <= i.hi; };
  if (!in_unit(sr_lr_high) || !in_unit(sr_lr_low)) {
    throw std::invalid_argument("SR/LR intervals must lie within [0, 1]");
  }
  if (sr_lr_low.hi > sr_lr_high.lo) throw std::invalid_argument("low SR/LR interval must sit below the high one");
  if (!(gr_tolerance >= 0.0)) throw std::invalid_argument("gr_tolerance must be >= 0");
}

PatternMemory PatternMemory::from_population(std::span<const Candidate> population, std::size_t capacity) {
  if (capacity == 0 || capacity > population.size()) {
    throw std::invalid_argument("pattern memory capacity must be in [1, population size]");
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return population[a].fitness < population[b].fitness; });
  PatternMemory pm;
  pm.entries_.reserve(capacity);
  for (std::size_t i = 0; i < capacity; ++i) pm.entries_.push_back(population[order[i]]);
  return pm;
}

std::size_t PatternMemory::worst_index() const {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].fitness > entries_[worst].fitness) worst = i;
  }
  return worst;
}

double PatternMemory::best_fitness() const {
  double best = entries_.front().fitness;
  for (const auto& e : entries_) best = std::min(best, e.fitness);
  return best;
}

bool PatternMemory::replace_worst(const Candidate& candidate) {
  const std::size_t worst = worst_index();
  if (!improves(candidate.fitness, entries_[worst].fitness)) return false;
  entries_[worst] = candidate;
  return true;
}

double random_hand_pressure(const Problem& problem, Rng& rng) { return rng.uniform(problem.lower, problem.upper); }

double select_hand_pressure(std::span<const double> position, Rng& rng) {
  return position[rng.index(position.size())];
}

double golden_ratio(std::span<const double> position, Rng& rng) {
  const std::size_t dim = position.size();
  if (dim < 2) throw std::invalid_argument("golden ratio needs at least two coordinates");
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::size_t m = rng.index(dim);
    std::size_t n = rng.index(dim - 1);
    if (n >= m) ++n;
    const double length = position[m];
    if (length != 0.0) return golden_ratio_of(length, position[n]);
  }
  return kGoldenRatio;
}

Vector skill_update(std::span<const double> x, std::span<const double> lbest, std::span<const double> gbest,
                    double gr, double sr, double lr, const Problem& problem) {
  Vector next(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    next[k] = gr + sr * (lbest[k] - x[k]) + lr * (gbest[k] - x[k]);
  }
  clamp_in_place(next, problem.lower, problem.upper);
  return next;
}

Vector creativity_update(std::span<const double> pm_entry, std::span<const double> gbest, double sr,
                         const Problem& problem) {
  Vector next(pm_entry.size());
  for (std::size_t k = 0; k < pm_entry.size(); ++k) next[k] = pm_entry[k] + sr * gbest[k];
  clamp_in_place(next, problem.lower, problem.upper);
  return next;
}

CddoState cddo_init(const Problem& problem, std::size_t pop_size, std::size_t pm_size, Rng& rng) {
  if (problem.dim < 2) throw std::invalid_argument("CDDO needs a problem with dim >= 2");
  CddoState state;
  state.population = init_population(problem, pop_size, rng);
  state.evals = pop_size;
  state.lbest = state.population;
  state.gbest = state.population.front();
  for (const auto& c : state.population) {
    if (improves(c.fitness, state.gbest.fitness)) state.gbest = c;
  }
  state.pm = PatternMemory::from_population(state.population, pm_size);
  return state;
}

void cddo_step(CddoState& state, const Problem& problem, const CddoParams& params, Rng& rng,
               std::vector<AgentStep>* log) {
  for (std::size_t i = 0; i < state.population.size(); ++i) {
    Candidate& agent = state.population[i];
    const double rhp = random_hand_pressure(problem, rng);
    const double hp = select_hand_pressure(agent.position, rng);
    const double gr = golden_ratio(agent.position, rng);

    AgentStep step;
    if (hp < rhp) {
      step.branch = Branch::skill;
      step.sr = rng.uniform(params.sr_lr_high.lo, params.sr_lr_high.hi);
      step.lr = rng.uniform(params.sr_lr_high.lo, params.sr_lr_high.hi);
      agent.position =
          skill_update(agent.position, state.lbest[i].position, state.gbest.position, gr, step.sr, step.lr, problem);
    } else if (std::abs(gr - kGoldenRatio) <= params.gr_tolerance) {
      step.branch = Branch::creativity;
      step.sr = rng.uniform(params.sr_lr_low.lo, params.sr_lr_low.hi);
      const Candidate& pattern = state.pm[rng.index(state.pm.size())];
      agent.position = creativity_update(pattern.position, state.gbest.position, step.sr, problem);
    }
    if (log) log->push_back(step);
    if (step.branch == Branch::none) continue;

    agent.fitness = problem.evaluate(agent.position, rng);
    ++state.evals;
    if (improves(agent.fitness, state.lbest[i].fitness)) {
      state.lbest[i] = agent;
      if (improves(agent.fitness, state.gbest.fitness)) state.gbest = agent;
    }
  }
  state.pm.replace_worst(state.gbest);
  ++state.iteration;
}

RunResult cddo_run(const Problem& problem, const RunConfig& config, const CddoParams& params,
                   std::uint64_t seed) {
  problem.validate();
  config.validate();
  params.validate(config.pop_size);

  Rng rng(seed);
  CddoState state = cddo_init(problem, config.pop_size, params.resolved_pm_size(config.pop_size), rng);

  RunResult result;
  result.seed = seed;
  result.trace.reserve(config.max_iters);
  for (std::size_t t = 0; t < config.max_iters; ++t) {
    cddo_step(state, problem, params, rng);
    result.trace.push_back(state.gbest.fitness);
  }
  result.best_fitness = state.gbest.fitness;
  result.best_position = state.gbest.position;
  result.evals = state.evals;
  return result;
}

}  // namespace cddohs
