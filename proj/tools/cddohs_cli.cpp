// Command-line experiment runner for CDDO, HS and CDDO-HS.
//
//   cddohs run --algo all --func classical --runs 30 --seed 7 --out results/
//   cddohs compare --summary results/summary.csv --reference table2
//   cddohs rank --input results/summary.csv
//   cddohs rank --reference table6
//   cddohs list

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cddohs/benchmarks.hpp"
#include "cddohs/harness.hpp"
#include "cddohs/reference.hpp"
#include "cddohs/stats.hpp"

using namespace cddohs;

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<Algorithm> parse_algorithms(const std::string& text) {
  if (text == "all") return {kAllAlgorithms.begin(), kAllAlgorithms.end()};
  std::vector<Algorithm> algos;
  for (const auto& item : split_list(text)) algos.push_back(parse_algorithm(item));
  return algos;
}

std::vector<FunctionId> parse_functions(const std::string& text) {
  std::vector<FunctionId> funcs;
  if (text == "all" || text == "classical") {
    for (const auto& spec : benchmark_specs()) funcs.push_back(spec.id);
    return funcs;
  }
  for (const auto& item : split_list(text)) funcs.push_back(parse_function_id(item));
  return funcs;
}

void print_rank_table(const RankTable& table) {
  std::printf("func");
  for (const auto& a : table.algorithms) std::printf(",%s", a.c_str());
  std::printf("\n");
  for (std::size_t f = 0; f < table.functions.size(); ++f) {
    std::printf("%s", table.functions[f].c_str());
    for (double p : table.placements[f]) std::printf(",%g", p);
    std::printf("\n");
  }
  std::printf("score");
  for (double s : table.scores) std::printf(",%.4g", s);
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CDDO / HS / CDDO-HS benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an (algorithm x function x seed) grid and write artifacts");
  std::string algo_arg = "all";
  std::string func_arg = "classical";
  RunConfig config;
  std::string out_dir = "results";
  std::string format = "both";
  int threads = 0;
  bool serial = false;
  run->add_option("--algo", algo_arg, "cddo | hs | cddo-hs | all (comma lists allowed)");
  run->add_option("--func", func_arg, "F1..F19 | classical | all (comma lists allowed)");
  run->add_option("--pop", config.pop_size, "Population / harmony memory size")->check(CLI::PositiveNumber);
  run->add_option("--iters", config.max_iters, "Iterations per run")->check(CLI::PositiveNumber);
  run->add_option("--runs", config.n_runs, "Independent runs per cell")->check(CLI::PositiveNumber);
  run->add_option("--seed", config.base_seed, "Base seed");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", format, "csv | json | both")->check(CLI::IsMember({"csv", "json", "both"}));
  run->add_option("--threads", threads, "OpenMP threads (0 = default)");
  run->add_flag("--serial", serial, "Use the serial reference path");

  auto* compare = app.add_subcommand("compare", "Compare a summary.csv with the published classical-suite table");
  std::string summary_path;
  std::string compare_ref = "table2";
  compare->add_option("--summary", summary_path, "summary.csv from `run`")->required();
  compare->add_option("--reference", compare_ref, "Reference table")->check(CLI::IsMember({"table2"}));

  auto* rank = app.add_subcommand("rank", "Rank algorithms by per-function averages");
  std::string rank_input;
  std::string rank_ref;
  std::string ties = "average";
  auto* input_opt = rank->add_option("--input", rank_input, "CSV with func, algo and avg columns");
  auto* ref_opt = rank->add_option("--reference", rank_ref, "Embedded data set")->check(CLI::IsMember({"table6"}));
  input_opt->excludes(ref_opt);
  rank->add_option("--ties", ties, "average | min")->check(CLI::IsMember({"average", "min"}));

  auto* list = app.add_subcommand("list", "Print the benchmark registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      ExperimentPlan plan;
      plan.algorithms = parse_algorithms(algo_arg);
      plan.functions = parse_functions(func_arg);
      plan.config = config;
      plan.output_dir = out_dir;
      plan.write_csv = format != "json";
      plan.write_json = format != "csv";
      plan.parallel = !serial;
      plan.threads = threads;
      const auto report = run_experiment(plan);
      write_summary_csv(std::cout, report.summary);
      return 0;
    }
    if (*compare) {
      const auto report = compare_to_reference(read_summary_csv(summary_path));
      write_comparison_csv(std::cout, report);
      return 0;
    }
    if (*rank) {
      if (rank_input.empty() && rank_ref.empty()) {
        std::cerr << "rank: give --input <csv> or --reference table6\n";
        return 2;
      }
      const ResultsGrid grid =
          rank_input.empty() ? reference::cec_results_grid() : to_results_grid(read_summary_csv(rank_input));
      print_rank_table(rank_algorithms(grid, ties == "min" ? TieRule::minimum : TieRule::average));
      return 0;
    }
    if (*list) {
      std::printf("id,name,family,dim,lower,upper,f_min,stochastic\n");
      for (const auto& s : benchmark_specs()) {
        std::printf("%s,%s,%s,%zu,%g,%g,%.10g,%s\n", to_string(s.id).c_str(), std::string(s.name).c_str(),
                    std::string(to_string(s.family)).c_str(), s.dim, s.lower, s.upper, s.f_min,
                    s.stochastic ? "yes" : "no");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
