#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cddohs/problem.hpp"

namespace cddohs {

/// Target of the golden-ratio nearness test.
inline constexpr double kGoldenRatio = 1.618;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct CddoParams {
  /// Creativity factor. Kept for completeness; the creativity update does
  /// not use it.
  double cr = 0.1;
  /// SR/LR range on the skill (low hand pressure) branch.
  Interval sr_lr_high{0.6, 1.0};
  /// SR range on the creativity branch.
  Interval sr_lr_low{0.0, 0.5};
  /// Pattern memory capacity; 0 means ceil(0.2 * pop_size).
  std::size_t pm_size = 0;
  /// Maximum |XGR - 1.618| accepted as "near the golden ratio".
  double gr_tolerance = 0.1;

  std::size_t resolved_pm_size(std::size_t pop_size) const;
  void validate(std::size_t pop_size) const;
};

/// Elite archive used by the creativity update. Capacity is fixed once
/// built; contents change through worst-entry replacement only.
class PatternMemory {
 public:
  PatternMemory() = default;

  /// The `capacity` best members of `population`, ascending by fitness.
  static PatternMemory from_population(std::span<const Candidate> population, std::size_t capacity);

  std::span<const Candidate> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Candidate& operator[](std::size_t i) const { return entries_[i]; }

  std::size_t worst_index() const;
  double worst_fitness() const { return entries_[worst_index()].fitness; }
  double best_fitness() const;

  /// Overwrites the worst entry when candidate.fitness is strictly lower.
  bool replace_worst(const Candidate& candidate);

 private:
  std::vector<Candidate> entries_;
};

enum class Branch { skill, creativity, none };

/// What happened to one agent in one step; collected on request for
/// instrumentation.
struct AgentStep {
  Branch branch = Branch::none;
  double sr = 0.0;
  double lr = 0.0;
};

struct CddoState {
  std::vector<Candidate> population;
  std::vector<Candidate> lbest;
  Candidate gbest;
  PatternMemory pm;
  std::size_t iteration = 0;
  std::size_t evals = 0;
};

/// RHP: uniform in [lower, upper]. One draw.
double random_hand_pressure(const Problem& problem, Rng& rng);

/// HP: a uniformly chosen coordinate of `position`. One draw.
double select_hand_pressure(std::span<const double> position, Rng& rng);

/// (length + width) / length.
inline double golden_ratio_of(double length, double width) { return (length + width) / length; }

/// XGR = (x[M] + x[N]) / x[M] for two distinct random coordinates M, N.
/// When x[M] is exactly zero the pair is redrawn once; if it is zero again
/// the result is kGoldenRatio. Throws std::invalid_argument for fewer than
/// two coordinates.
double golden_ratio(std::span<const double> position, Rng& rng);

/// gr + sr * (lbest - x) + lr * (gbest - x) with gr added to every
/// coordinate, clamped to the box.
Vector skill_update(std::span<const double> x, std::span<const double> lbest, std::span<const double> gbest,
                    double gr, double sr, double lr, const Problem& problem);

/// pm_entry + sr * gbest, clamped to the box.
Vector creativity_update(std::span<const double> pm_entry, std::span<const double> gbest, double sr,
                         const Problem& problem);

/// Random population, lbest = population, gbest = best member, pattern
/// memory filled with the pm_size best members.
CddoState cddo_init(const Problem& problem, std::size_t pop_size, std::size_t pm_size, Rng& rng);

/// One iteration over all agents. Per agent, in order: RHP, HP, XGR; then
/// the skill update when HP < RHP (SR and LR drawn from sr_lr_high), else
/// the creativity update from a random pattern-memory entry when XGR is
/// within gr_tolerance of 1.618 (SR drawn from sr_lr_low), else nothing.
/// Updated agents are evaluated immediately and lbest/gbest refreshed on
/// strict improvement, so later agents see the new gbest. At the end the
/// iteration's gbest replaces the worst pattern-memory entry if strictly
/// better (copies of gbest may accumulate).
///
/// Evaluations: one per updated agent.
void cddo_step(CddoState& state, const Problem& problem, const CddoParams& params, Rng& rng,
               std::vector<AgentStep>* log = nullptr);

/// evals == pop_size + (number of skill and creativity updates).
RunResult cddo_run(const Problem& problem, const RunConfig& config, const CddoParams& params,
                   std::uint64_t seed);

}  // namespace cddohs
