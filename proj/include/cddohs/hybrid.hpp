#pragma once

#include <cstddef>

#include "cddohs/cddo.hpp"
#include "cddohs/hs.hpp"

namespace cddohs {

/// ceil(0.8 * pop_size): 32 for the default population of 40.
std::size_t hybrid_pm_size(std::size_t pop_size);

struct HybridParams {
  /// cddo.pm_size is ignored; the hybrid always uses hybrid_pm_size().
  CddoParams cddo;
  /// Applied to the pattern memory; hms is ignored.
  HsParams hs;
  /// HS improvisations on the pattern memory per iteration.
  std::size_t refresh_count = 1;
};

/// One HS improvisation with the pattern memory as the harmony memory. The
/// new vector is evaluated (one evaluation) and replaces the worst entry
/// when strictly better. Returns whether it did.
bool refresh_pattern_memory(PatternMemory& pm, const HsParams& hs_params, const Problem& problem, Rng& rng,
                            ImproviseCounts* counts = nullptr);

/// Per iteration: refresh_count pattern-memory refreshes, then a CDDO step
/// over the population.
///
/// evals == pop_size + (number of skill and creativity updates)
///          + refresh_count * max_iters.
RunResult cddo_hs_run(const Problem& problem, const RunConfig& config, const HybridParams& params,
                      std::uint64_t seed);

}  // namespace cddohs
