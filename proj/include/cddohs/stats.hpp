#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cddohs {

struct SampleSummary {
  double avg = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for n == 1.
  double std = 0.0;
  std::size_t n = 0;
};

/// Throws std::invalid_argument on an empty sample.
SampleSummary summarize(std::span<const double> samples);

/// Midranks (1-based, ties share the average rank) of `values`.
std::vector<double> midranks(std::span<const double> values);

/// Samples with a combined size at or below this use the exact null
/// distribution; larger ones use the normal approximation.
inline constexpr std::size_t kExactRankSumLimit = 20;

/// Two-sided rank-sum p-value from the exact permutation distribution of
/// the midrank sum, conditional on the observed ties. Counted with a
/// subset-sum recurrence over doubled midranks.
double rank_sum_p_exact(std::span<const double> a, std::span<const double> b);

/// Two-sided rank-sum p-value from the normal approximation to the
/// Mann-Whitney U statistic with tie-corrected variance and a 0.5
/// continuity correction.
double rank_sum_p_normal(std::span<const double> a, std::span<const double> b);

/// Two-sided Wilcoxon rank-sum p-value in (0, 1]. Exact for combined
/// sizes up to kExactRankSumLimit, normal approximation above. Returns 1
/// when every value in both samples is identical. Throws
/// std::invalid_argument when either sample has fewer than 2 values.
double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

/// How tied averages are placed.
enum class TieRule {
  /// Tied algorithms get the mean of the placements they span (2 and 3
  /// tied -> 2.5 each).
  average,
  /// Tied algorithms all get the best placement they span.
  minimum,
};

/// Orders "F2" before "F10"; falls back to plain string order.
struct FunctionIdLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

/// function id -> (algorithm name -> average best fitness).
using ResultsGrid = std::map<std::string, std::map<std::string, double>, FunctionIdLess>;

struct RankTable {
  std::vector<std::string> algorithms;
  std::vector<std::string> functions;
  /// placements[f][a]: placement of algorithms[a] on functions[f], 1 = best.
  std::vector<std::vector<double>> placements;
  /// Mean placement per algorithm; lower is better.
  std::vector<double> scores;

  double score_of(const std::string& algorithm) const;
};

/// Ranks algorithms per function by ascending average and scores each by
/// its mean placement. Throws std::invalid_argument when the grid is empty
/// or the rows do not share one algorithm set.
RankTable rank_algorithms(const ResultsGrid& results, TieRule ties = TieRule::average);

}  // namespace cddohs
