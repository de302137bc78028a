#include "cddohs/hybrid.hpp"

#include <cmath>

namespace cddohs {

std::size_t hybrid_pm_size(std::size_t pop_size) {
  // 0.8 is not exact in binary; 4/5 in integers avoids ceil(32.000000000000004).
  return (4 * pop_size + 4) / 5;
}

bool refresh_pattern_memory(PatternMemory& pm, const HsParams& hs_params, const Problem& problem, Rng& rng,
                            ImproviseCounts* counts) {
  Candidate fresh;
  fresh.position = improvise(pm.entries(), hs_params, problem, rng, counts);
  fresh.fitness = problem.evaluate(fresh.position, rng);
  return pm.replace_worst(fresh);
}

RunResult cddo_hs_run(const Problem& problem, const RunConfig& config, const HybridParams& params,
                      std::uint64_t seed) {
  problem.validate();
  config.validate();
  params.hs.validate();

  CddoParams cddo = params.cddo;
  cddo.pm_size = hybrid_pm_size(config.pop_size);
  cddo.validate(config.pop_size);

  Rng rng(seed);
  CddoState state = cddo_init(problem, config.pop_size, cddo.pm_size, rng);

  RunResult result;
  result.seed = seed;
  result.trace.reserve(config.max_iters);
  for (std::size_t t = 0; t < config.max_iters; ++t) {
    for (std::size_t r = 0; r < params.refresh_count; ++r) {
      refresh_pattern_memory(state.pm, params.hs, problem, rng);
      ++state.evals;
    }
    cddo_step(state, problem, cddo, rng);
    result.trace.push_back(state.gbest.fitness);
  }
  result.best_fitness = state.gbest.fitness;
  result.best_position = state.gbest.position;
  result.evals = state.evals;
  return result;
}

}  // namespace cddohs
