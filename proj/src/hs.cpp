#include "cddohs/hs.hpp"

#include <stdexcept>

namespace cddohs {

void HsParams::validate() const {
  if (!(hmcr >= 0.0 && hmcr <= 1.0)) throw std::invalid_argument("hmcr must be in [0, 1]");
  if (!(par >= 0.0 && par <= 1.0)) throw std::invalid_argument("par must be in [0, 1]");
  if (!(bw >= 0.0)) throw std::invalid_argument("bw must be >= 0");
}

HarmonyMemory::HarmonyMemory(std::vector<Candidate> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("harmony memory needs at least one row");
  recompute_worst();
}

HarmonyMemory HarmonyMemory::random(const Problem& problem, std::size_t hms, Rng& rng) {
  return HarmonyMemory(init_population(problem, hms, rng));
}

std::size_t HarmonyMemory::best_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].fitness < rows_[best].fitness) best = i;
  }
  return best;
}

void HarmonyMemory::recompute_worst() {
  worst_ = 0;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].fitness > rows_[worst_].fitness) worst_ = i;
  }
}

bool HarmonyMemory::replace_worst(const Candidate& candidate) {
  if (!improves(candidate.fitness, rows_[worst_].fitness)) return false;
  rows_[worst_] = candidate;
  recompute_worst();
  return true;
}

Vector improvise(std::span<const Candidate> memory, const HsParams& params, const Problem& problem, Rng& rng,
                 ImproviseCounts* counts) {
  const double bandwidth = params.range_scaled_bw ? params.bw * (problem.upper - problem.lower) : params.bw;
  Vector x(problem.dim);
  for (std::size_t k = 0; k < problem.dim; ++k) {
    if (rng.unit() < params.hmcr) {
      double value = memory[rng.index(memory.size())].position[k];
      const bool adjust = rng.unit() < params.par;
      if (adjust) value += rng.uniform(-1.0, 1.0) * bandwidth;
      x[k] = value;
      if (counts) {
        ++counts->memory;
        if (adjust) ++counts->pitch;
      }
    } else {
      x[k] = rng.uniform(problem.lower, problem.upper);
      if (counts) ++counts->random;
    }
  }
  if (counts) counts->components += problem.dim;
  clamp_in_place(x, problem.lower, problem.upper);
  return x;
}

RunResult hs_run(const Problem& problem, const RunConfig& config, const HsParams& params, std::uint64_t seed) {
  problem.validate();
  config.validate();
  params.validate();

  Rng rng(seed);
  HarmonyMemory hm = HarmonyMemory::random(problem, params.resolved_hms(config.pop_size), rng);

  RunResult result;
  result.seed = seed;
  result.evals = hm.size();
  result.trace.reserve(config.max_iters);

  double best = hm.best().fitness;
  for (std::size_t t = 0; t < config.max_iters; ++t) {
    Candidate fresh;
    fresh.position = improvise(hm.rows(), params, problem, rng);
    fresh.fitness = problem.evaluate(fresh.position, rng);
    ++result.evals;
    if (hm.replace_worst(fresh) && improves(fresh.fitness, best)) best = fresh.fitness;
    result.trace.push_back(best);
  }

  const Candidate& incumbent = hm.best();
  result.best_fitness = incumbent.fitness;
  result.best_position = incumbent.position;
  return result;
}

}  // namespace cddohs
