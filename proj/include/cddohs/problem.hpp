#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cddohs/rng.hpp"

namespace cddohs {

using Vector = std::vector<double>;

/// Objective signature. The Rng is only consulted by stochastic objectives
/// (F7); deterministic ones ignore it.
using Objective = std::function<double(std::span<const double>, Rng&)>;

/// A box-bounded minimization problem with the same [lower, upper] on every
/// coordinate.
struct Problem {
  std::string id;
  std::size_t dim = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> known_min;
  bool stochastic = false;
  Objective objective;

  double evaluate(std::span<const double> x, Rng& rng) const { return objective(x, rng); }

  bool contains(std::span<const double> x) const;

  /// Throws std::invalid_argument when dim == 0, lower >= upper or the
  /// objective is empty.
  void validate() const;
};

struct Candidate {
  Vector position;
  double fitness = 0.0;
};

/// Saturating clamp onto [lower, upper].
Vector clamp(Vector position, const Problem& problem);
void clamp_in_place(std::span<double> position, double lower, double upper);

/// n candidates drawn uniformly from the box, each evaluated once.
std::vector<Candidate> init_population(const Problem& problem, std::size_t n, Rng& rng);

struct RunConfig {
  std::size_t pop_size = 40;
  std::size_t max_iters = 500;
  std::size_t n_runs = 30;
  std::uint64_t base_seed = 0;

  std::uint64_t seed_for_run(std::size_t run) const { return base_seed + run; }
  void validate() const;
};

struct RunResult {
  double best_fitness = 0.0;
  Vector best_position;
  /// Global-best fitness at the end of each iteration.
  std::vector<double> trace;
  std::uint64_t seed = 0;
  std::size_t evals = 0;
};

/// Tracks the incumbent with strict-improvement replacement.
inline bool improves(double candidate, double incumbent) { return candidate < incumbent; }

}  // namespace cddohs
