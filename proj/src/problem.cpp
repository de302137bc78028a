#include "cddohs/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace cddohs {

bool Problem::contains(std::span<const double> x) const {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v >= lower && v <= upper; });
}

void Problem::validate() const {
  if (dim == 0) throw std::invalid_argument("problem '" + id + "': dim must be >= 1");
  if (!(lower < upper)) throw std::invalid_argument("problem '" + id + "': lower must be < upper");
  if (!objective) throw std::invalid_argument("problem '" + id + "': objective is empty");
}

void clamp_in_place(std::span<double> position, double lower, double upper) {
  for (double& v : position) v = std::min(upper, std::max(lower, v));
}

Vector clamp(Vector position, const Problem& problem) {
  clamp_in_place(position, problem.lower, problem.upper);
  return position;
}

std::vector<Candidate> init_population(const Problem& problem, std::size_t n, Rng& rng) {
  std::vector<Candidate> population(n);
  for (auto& c : population) {
    c.position.resize(problem.dim);
    for (double& v : c.position) v = rng.uniform(problem.lower, problem.upper);
    c.fitness = problem.evaluate(c.position, rng);
  }
  return population;
}

void RunConfig::validate() const {
  if (pop_size == 0) throw std::invalid_argument("pop_size must be >= 1");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be >= 1");
  if (n_runs == 0) throw std::invalid_argument("n_runs must be >= 1");
}

}  // namespace cddohs
