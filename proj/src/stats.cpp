#include "cddohs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cddohs {

SampleSummary summarize(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("summarize: empty sample");
  SampleSummary s;
  s.n = samples.size();
  s.avg = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : samples) ss += (v - s.avg) * (v - s.avg);
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

std::vector<double> pooled(std::span<const double> a, std::span<const double> b) {
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return all;
}

void require_pair(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("rank-sum test needs >= 2 values per sample");
}

bool all_identical(std::span<const double> a, std::span<const double> b) {
  const double v = a.front();
  auto same = [v](double x) { return x == v; };
  return std::all_of(a.begin(), a.end(), same) && std::all_of(b.begin(), b.end(), same);
}

double positive(double p) { return std::clamp(p, std::numeric_limits<double>::min(), 1.0); }

}  // namespace

double rank_sum_p_exact(std::span<const double> a, std::span<const double> b) {
  require_pair(a, b);
  if (all_identical(a, b)) return 1.0;
  const auto all = pooled(a, b);
  const auto ranks = midranks(all);
  const std::size_t n = all.size();
  const std::size_t na = a.size();

  // Doubled midranks are integers.
  std::vector<std::int64_t> r2(n);
  for (std::size_t i = 0; i < n; ++i) r2[i] = std::llround(2.0 * ranks[i]);
  const std::int64_t total = std::accumulate(r2.begin(), r2.end(), std::int64_t{0});

  // ways[k][s]: subsets of size k with doubled rank sum s.
  std::vector<std::vector<double>> ways(na + 1, std::vector<double>(static_cast<std::size_t>(total) + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(r2[i]);
    for (std::size_t k = std::min(na, i + 1); k >= 1; --k) {
      auto& to = ways[k];
      const auto& from = ways[k - 1];
      for (std::size_t s = to.size() - 1; s >= r; --s) {
        to[s] += from[s - r];
        if (s == r) break;
      }
    }
  }

  std::int64_t observed = 0;
  for (std::size_t i = 0; i < na; ++i) observed += r2[i];
  const auto mean2 = static_cast<std::int64_t>(na * (n + 1));
  const std::int64_t distance = std::llabs(observed - mean2);

  double extreme = 0.0;
  double count = 0.0;
  for (std::size_t s = 0; s < ways[na].size(); ++s) {
    const double w = ways[na][s];
    if (w == 0.0) continue;
    count += w;
    if (std::llabs(static_cast<std::int64_t>(s) - mean2) >= distance) extreme += w;
  }
  return positive(extreme / count);
}

double rank_sum_p_normal(std::span<const double> a, std::span<const double> b) {
  require_pair(a, b);
  if (all_identical(a, b)) return 1.0;
  const auto all = pooled(a, b);
  const auto ranks = midranks(all);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;

  double rank_sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) rank_sum += ranks[i];
  const double u = rank_sum - na * (na + 1.0) / 2.0;
  const double mean = na * nb / 2.0;

  // Tie term: sum over tie groups of (t^3 - t).
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  double ties = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    ties += t * t * t - t;
    i = j + 1;
  }
  const double variance = na * nb / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
  if (!(variance > 0.0)) return 1.0;

  const double z = std::max(std::abs(u - mean) - 0.5, 0.0) / std::sqrt(variance);
  return positive(std::erfc(z / std::sqrt(2.0)));
}

double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
  require_pair(a, b);
  if (a.size() + b.size() <= kExactRankSumLimit) return rank_sum_p_exact(a, b);
  return rank_sum_p_normal(a, b);
}

bool FunctionIdLess::operator()(const std::string& a, const std::string& b) const {
  auto split = [](const std::string& s, std::string& prefix, long& number) {
    const auto pos = s.find_first_of("0123456789");
    if (pos == std::string::npos || s.find_first_not_of("0123456789", pos) != std::string::npos) return false;
    if (s.size() - pos > 9) return false;
    prefix = s.substr(0, pos);
    number = std::stol(s.substr(pos));
    return true;
  };
  std::string pa, pb;
  long na = 0, nb = 0;
  if (split(a, pa, na) && split(b, pb, nb)) {
    if (pa != pb) return pa < pb;
    if (na != nb) return na < nb;
  }
  return a < b;
}

double RankTable::score_of(const std::string& algorithm) const {
  const auto it = std::find(algorithms.begin(), algorithms.end(), algorithm);
  if (it == algorithms.end()) throw std::invalid_argument("no algorithm named '" + algorithm + "' in rank table");
  return scores[static_cast<std::size_t>(it - algorithms.begin())];
}

RankTable rank_algorithms(const ResultsGrid& results, TieRule ties) {
  if (results.empty()) throw std::invalid_argument("rank_algorithms: no functions");
  RankTable table;
  for (const auto& [algo, _] : results.begin()->second) table.algorithms.push_back(algo);
  if (table.algorithms.empty()) throw std::invalid_argument("rank_algorithms: no algorithms");

  const std::size_t m = table.algorithms.size();
  table.scores.assign(m, 0.0);
  for (const auto& [func, row] : results) {
    bool same = row.size() == m;
    for (std::size_t a = 0; same && a < m; ++a) same = row.count(table.algorithms[a]) == 1;
    if (!same) throw std::invalid_argument("rank_algorithms: function '" + func + "' has a different algorithm set");

    std::vector<double> placement(m);
    for (std::size_t a = 0; a < m; ++a) {
      const double v = row.at(table.algorithms[a]);
      std::size_t better = 0;
      std::size_t equal = 0;
      for (const auto& [other, w] : row) {
        if (w < v) ++better;
        else if (w == v) ++equal;
      }
      placement[a] = ties == TieRule::minimum ? static_cast<double>(better + 1)
                                              : static_cast<double>(better) + static_cast<double>(equal + 1) / 2.0;
      table.scores[a] += placement[a];
    }
    table.functions.push_back(func);
    table.placements.push_back(std::move(placement));
  }
  for (double& s : table.scores) s /= static_cast<double>(results.size());
  return table;
}

}  // namespace cddohs
