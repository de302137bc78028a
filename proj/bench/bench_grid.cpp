// Serial vs OpenMP grid execution on the classical suite.
//
//   bench_grid [runs] [iters] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "cddohs/grid.hpp"

#ifdef CDDOHS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace cddohs;

namespace {

bool same_traces(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (std::size_t r = 0; r < a[c].runs.size(); ++r) {
      if (a[c].runs[r].trace != b[c].runs[r].trace) return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  config.n_runs = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 10;
  config.max_iters = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 500;
  const int threads = argc > 3 ? std::atoi(argv[3]) : 0;
  config.base_seed = 42;

  std::vector<FunctionId> funcs;
  for (const auto& s : benchmark_specs()) funcs.push_back(s.id);
  const AlgorithmParams params;

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto serial = run_grid_serial(kAllAlgorithms, funcs, config, params);
  const auto t1 = clock::now();
  const auto parallel = run_grid_parallel(kAllAlgorithms, funcs, config, params, threads);
  const auto t2 = clock::now();

  const double serial_s = std::chrono::duration<double>(t1 - t0).count();
  const double parallel_s = std::chrono::duration<double>(t2 - t1).count();
#ifdef CDDOHS_HAVE_OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#else
  const int team = 1;
#endif
  std::printf("cells=%zu runs/cell=%zu iters=%zu threads=%d\n", serial.size(), config.n_runs, config.max_iters, team);
  std::printf("serial   %.3f s\n", serial_s);
  std::printf("parallel %.3f s  (speedup %.2fx)\n", parallel_s, serial_s / parallel_s);
  const bool same = same_traces(serial, parallel);
  std::printf("traces identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
