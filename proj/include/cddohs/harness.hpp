#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cddohs/grid.hpp"
#include "cddohs/stats.hpp"

namespace cddohs {

struct ExperimentPlan {
  std::vector<Algorithm> algorithms;
  std::vector<FunctionId> functions;
  RunConfig config;
  AlgorithmParams params;
  std::filesystem::path output_dir;
  bool write_csv = true;
  bool write_json = true;
  /// Run the grid on OpenMP threads; false selects the serial path.
  bool parallel = true;
  int threads = 0;

  /// Throws std::invalid_argument for empty algorithm/function lists or a
  /// plan that writes nothing.
  void validate() const;
};

struct SummaryRow {
  std::string algo;
  std::string func;
  double avg = 0.0;
  double std = 0.0;
  double best = 0.0;
  double worst = 0.0;
  std::size_t n_runs = 0;
  std::uint64_t seed = 0;
};

struct PValueRow {
  std::string func;
  std::string algo_a;
  std::string algo_b;
  double p_value = 1.0;
};

struct ExperimentReport {
  std::vector<Cell> cells;
  std::vector<SummaryRow> summary;
  std::vector<PValueRow> pvalues;
};

/// Summary rows and pairwise rank-sum p-values for a finished grid.
ExperimentReport tabulate(std::vector<Cell> cells, std::span<const Algorithm> algos);

/// Runs the plan and writes its artifacts into plan.output_dir:
///   summary.csv, pvalues.csv, convergence/<algo>_<func>.csv  (csv)
///   results.json                                             (json)
/// Every file is written to a temporary name and renamed into place.
/// Throws std::runtime_error when the directory cannot be created or
/// written.
ExperimentReport run_experiment(const ExperimentPlan& plan);

void write_artifacts(const ExperimentReport& report, const ExperimentPlan& plan);

/// Scientific notation with 17 significant digits (exact round trip).
std::string format_real(double value);

inline constexpr const char* kSummaryHeader = "algo,func,avg,std,best,worst,n_runs,seed";
inline constexpr const char* kConvergenceHeader = "run,iter,gbest";
inline constexpr const char* kPValueHeader = "func,algo_a,algo_b,p_value";

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_pvalues_csv(std::ostream& out, const std::vector<PValueRow>& rows);
void write_convergence_csv(std::ostream& out, const Cell& cell);

/// Reads a CSV that has at least algo, func and avg columns (a summary.csv
/// or any long-format table of averages). Missing optional columns stay
/// zero. Throws std::runtime_error on unreadable or malformed input.
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

/// Long-format rows -> function x algorithm grid of averages.
ResultsGrid to_results_grid(const std::vector<SummaryRow>& rows);

struct ComparisonRow {
  std::string func;
  std::string algo;
  double measured_avg = 0.0;
  std::optional<double> reference_avg;
  /// |log10|measured| - log10|reference||; both exactly 0 counts as 0.
  std::optional<double> log10_gap;
};

struct FunctionVerdict {
  std::string func;
  std::string measured_winner;
  /// Algorithms sharing the lowest published average, '|'-separated.
  std::string reference_winners;
  bool agree = false;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::vector<FunctionVerdict> verdicts;
  std::size_t wins_vs_hs = 0;
  std::size_t wins_vs_cddo = 0;
  std::size_t agreements = 0;
};

/// Lines the measured averages up against the published classical-suite
/// table. Cells with no published counterpart are reported with empty
/// reference fields.
ComparisonReport compare_to_reference(const std::vector<SummaryRow>& summary);

void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

}  // namespace cddohs
