#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cddohs/problem.hpp"

namespace cddohs {

struct HsParams {
  /// Harmony memory considering rate.
  double hmcr = 0.995;
  /// Pitch adjustment rate.
  double par = 0.1;
  /// Absolute pitch-adjustment bandwidth.
  double bw = 0.04;
  /// Harmony memory size; 0 means "use the run's pop_size".
  std::size_t hms = 0;
  /// When set, the perturbation is bw * (upper - lower) instead of bw.
  bool range_scaled_bw = false;

  std::size_t resolved_hms(std::size_t pop_size) const { return hms == 0 ? pop_size : hms; }
  void validate() const;
};

/// Per-component branch tallies from improvise().
struct ImproviseCounts {
  std::size_t components = 0;
  std::size_t memory = 0;
  std::size_t pitch = 0;
  std::size_t random = 0;
};

/// The HS population matrix. worst_index() always names a row of maximal
/// fitness.
class HarmonyMemory {
 public:
  HarmonyMemory() = default;
  explicit HarmonyMemory(std::vector<Candidate> rows);

  static HarmonyMemory random(const Problem& problem, std::size_t hms, Rng& rng);

  std::span<const Candidate> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t worst_index() const { return worst_; }
  std::size_t best_index() const;
  const Candidate& worst() const { return rows_[worst_]; }
  const Candidate& best() const { return rows_[best_index()]; }

  /// Overwrites the worst row when candidate.fitness is strictly lower.
  bool replace_worst(const Candidate& candidate);

 private:
  void recompute_worst();

  std::vector<Candidate> rows_;
  std::size_t worst_ = 0;
};

/// Composes one new vector column by column from `memory`: with
/// probability hmcr copy the column value of a uniformly chosen row and,
/// with probability par, shift it by uniform(-1, 1) * bw; otherwise draw
/// uniformly from the box. The result is clamped.
///
/// Random draws per component: 1 (hmcr test) + either {1 row pick, 1 par
/// test, 1 more when pitch-adjusted} or {1 uniform}.
Vector improvise(std::span<const Candidate> memory, const HsParams& params, const Problem& problem, Rng& rng,
                 ImproviseCounts* counts = nullptr);

/// Standard HS: hms random harmonies, then one improvisation per
/// iteration. evals == hms + max_iters.
RunResult hs_run(const Problem& problem, const RunConfig& config, const HsParams& params, std::uint64_t seed);

}  // namespace cddohs
