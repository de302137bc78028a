#include "cddohs/grid.hpp"

#include <stdexcept>
#include <string>

#ifdef CDDOHS_HAVE_OPENMP
#include <omp.h>
#endif

namespace cddohs {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::cddo_hs: return "cddo-hs";
    case Algorithm::cddo: return "cddo";
    case Algorithm::hs: return "hs";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : kAllAlgorithms) {
    if (text == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected cddo, hs or cddo-hs)");
}

RunResult run_algorithm(Algorithm algo, const Problem& problem, const RunConfig& config,
                        const AlgorithmParams& params, std::uint64_t seed) {
  switch (algo) {
    case Algorithm::cddo_hs: return cddo_hs_run(problem, config, params.hybrid, seed);
    case Algorithm::cddo: return cddo_run(problem, config, params.cddo, seed);
    case Algorithm::hs: return hs_run(problem, config, params.hs, seed);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::uint64_t cell_seed(std::uint64_t base_seed, Algorithm algo, FunctionId func) {
  const std::string key = std::string(to_string(algo)) + "/" + to_string(func);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return base_seed ^ h;
}

namespace {

struct Grid {
  std::vector<Problem> problems;  // one per cell
  std::vector<Cell> cells;
};

Grid prepare(std::span<const Algorithm> algos, std::span<const FunctionId> funcs, const RunConfig& config) {
  config.validate();
  Grid grid;
  for (FunctionId f : funcs) {
    const Problem problem = make_function(f);
    for (Algorithm a : algos) {
      grid.problems.push_back(problem);
      grid.cells.push_back(Cell{a, f, cell_seed(config.base_seed, a, f), std::vector<RunResult>(config.n_runs)});
    }
  }
  return grid;
}

}  // namespace

std::vector<Cell> run_grid_serial(std::span<const Algorithm> algos, std::span<const FunctionId> funcs,
                                  const RunConfig& config, const AlgorithmParams& params) {
  Grid grid = prepare(algos, funcs, config);
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    Cell& cell = grid.cells[c];
    for (std::size_t r = 0; r < config.n_runs; ++r) {
      cell.runs[r] = run_algorithm(cell.algo, grid.problems[c], config, params, cell.seed + r);
    }
  }
  return std::move(grid.cells);
}

std::vector<Cell> run_grid_parallel(std::span<const Algorithm> algos, std::span<const FunctionId> funcs,
                                    const RunConfig& config, const AlgorithmParams& params, int threads) {
  Grid grid = prepare(algos, funcs, config);
  // Surface parameter errors here; nothing may throw inside the parallel region.
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    RunConfig probe = config;
    probe.max_iters = 1;
    run_algorithm(grid.cells[c].algo, grid.problems[c], probe, params, grid.cells[c].seed);
  }

  const auto runs = static_cast<std::int64_t>(config.n_runs);
  const auto tasks = static_cast<std::int64_t>(grid.cells.size()) * runs;
#ifdef CDDOHS_HAVE_OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#else
  (void)threads;
#endif
  for (std::int64_t task = 0; task < tasks; ++task) {
    const auto c = static_cast<std::size_t>(task / runs);
    const auto r = static_cast<std::size_t>(task % runs);
    Cell& cell = grid.cells[c];
    cell.runs[r] = run_algorithm(cell.algo, grid.problems[c], config, params, cell.seed + r);
  }
  return std::move(grid.cells);
}

}  // namespace cddohs
