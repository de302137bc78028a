#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cddohs/benchmarks.hpp"
#include "cddohs/cddo.hpp"
#include "cddohs/hs.hpp"
#include "cddohs/hybrid.hpp"

namespace cddohs {

enum class Algorithm { cddo_hs, cddo, hs };

/// Canonical order used for every emitted table.
inline constexpr std::array<Algorithm, 3> kAllAlgorithms{Algorithm::cddo_hs, Algorithm::cddo, Algorithm::hs};

std::string_view to_string(Algorithm algo);
/// "cddo", "hs" or "cddo-hs". Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view text);

struct AlgorithmParams {
  CddoParams cddo;
  HsParams hs;
  HybridParams hybrid;
};

RunResult run_algorithm(Algorithm algo, const Problem& problem, const RunConfig& config,
                        const AlgorithmParams& params, std::uint64_t seed);

/// base_seed XOR FNV-1a("<algo>/<func>"). Run r of the cell uses
/// cell_seed + r, so any cell can be replayed on its own.
std::uint64_t cell_seed(std::uint64_t base_seed, Algorithm algo, FunctionId func);

/// All runs of one (algorithm, function) pair, ordered by run index.
struct Cell {
  Algorithm algo;
  FunctionId func;
  std::uint64_t seed;
  std::vector<RunResult> runs;
};

/// Cells ordered function-major, then by the order of `algos`.
std::vector<Cell> run_grid_serial(std::span<const Algorithm> algos, std::span<const FunctionId> funcs,
                                  const RunConfig& config, const AlgorithmParams& params);

/// Same cells, with the independent runs spread over OpenMP threads.
/// threads <= 0 keeps the OpenMP default. Output is identical to
/// run_grid_serial; without OpenMP it simply runs serially.
std::vector<Cell> run_grid_parallel(std::span<const Algorithm> algos, std::span<const FunctionId> funcs,
                                    const RunConfig& config, const AlgorithmParams& params, int threads = 0);

}  // namespace cddohs
