#include "cddohs/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cddohs/reference.hpp"
#include "cddohs/stats.hpp"

namespace cddohs {

namespace fs = std::filesystem;

void ExperimentPlan::validate() const {
  if (algorithms.empty()) throw std::invalid_argument("plan has no algorithms");
  if (functions.empty()) throw std::invalid_argument("plan has no functions");
  if (!write_csv && !write_json) throw std::invalid_argument("plan writes no format");
  config.validate();
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

ExperimentReport tabulate(std::vector<Cell> cells, std::span<const Algorithm> algos) {
  ExperimentReport report;
  // Final-best samples per (func, algo).
  std::map<std::pair<FunctionId, Algorithm>, std::vector<double>> samples;
  for (const Cell& cell : cells) {
    std::vector<double> best;
    best.reserve(cell.runs.size());
    for (const auto& run : cell.runs) best.push_back(run.best_fitness);
    const SampleSummary s = summarize(best);
    report.summary.push_back(SummaryRow{std::string(to_string(cell.algo)), to_string(cell.func), s.avg, s.std,
                                        *std::min_element(best.begin(), best.end()),
                                        *std::max_element(best.begin(), best.end()), best.size(), cell.seed});
    samples[{cell.func, cell.algo}] = std::move(best);
  }

  std::vector<FunctionId> funcs;
  for (const Cell& cell : cells) {
    if (std::find(funcs.begin(), funcs.end(), cell.func) == funcs.end()) funcs.push_back(cell.func);
  }
  for (FunctionId f : funcs) {
    for (std::size_t i = 0; i < algos.size(); ++i) {
      for (std::size_t j = i + 1; j < algos.size(); ++j) {
        const auto& a = samples.at({f, algos[i]});
        const auto& b = samples.at({f, algos[j]});
        const double p = a.size() >= 2 && b.size() >= 2 ? wilcoxon_rank_sum(a, b) : 1.0;
        report.pvalues.push_back(
            PValueRow{to_string(f), std::string(to_string(algos[i])), std::string(to_string(algos[j])), p});
      }
    }
  }
  report.cells = std::move(cells);
  return report;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.algo << ',' << r.func << ',' << format_real(r.avg) << ',' << format_real(r.std) << ','
        << format_real(r.best) << ',' << format_real(r.worst) << ',' << r.n_runs << ',' << r.seed << '\n';
  }
}

void write_pvalues_csv(std::ostream& out, const std::vector<PValueRow>& rows) {
  out << kPValueHeader << '\n';
  for (const auto& r : rows) out << r.func << ',' << r.algo_a << ',' << r.algo_b << ',' << format_real(r.p_value) << '\n';
}

void write_convergence_csv(std::ostream& out, const Cell& cell) {
  out << kConvergenceHeader << '\n';
  for (std::size_t r = 0; r < cell.runs.size(); ++r) {
    const auto& trace = cell.runs[r].trace;
    for (std::size_t t = 0; t < trace.size(); ++t) out << r << ',' << (t + 1) << ',' << format_real(trace[t]) << '\n';
  }
}

namespace {

template <typename Writer>
void write_atomically(const fs::path& target, Writer&& writer) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
}

nlohmann::json to_json(const ExperimentReport& report, const ExperimentPlan& plan) {
  using nlohmann::json;
  json doc;
  doc["config"] = {{"pop_size", plan.config.pop_size},
                   {"max_iters", plan.config.max_iters},
                   {"n_runs", plan.config.n_runs},
                   {"base_seed", plan.config.base_seed}};
  json summary = json::array();
  for (const auto& r : report.summary) {
    summary.push_back({{"algo", r.algo},
                       {"func", r.func},
                       {"avg", r.avg},
                       {"std", r.std},
                       {"best", r.best},
                       {"worst", r.worst},
                       {"n_runs", r.n_runs},
                       {"seed", r.seed}});
  }
  doc["summary"] = std::move(summary);
  json pvalues = json::array();
  for (const auto& r : report.pvalues) {
    pvalues.push_back({{"func", r.func}, {"algo_a", r.algo_a}, {"algo_b", r.algo_b}, {"p_value", r.p_value}});
  }
  doc["pvalues"] = std::move(pvalues);
  json convergence = json::array();
  for (const auto& cell : report.cells) {
    json runs = json::array();
    for (const auto& run : cell.runs) runs.push_back(run.trace);
    convergence.push_back({{"algo", std::string(to_string(cell.algo))}, {"func", to_string(cell.func)}, {"runs", runs}});
  }
  doc["convergence"] = std::move(convergence);
  return doc;
}

}  // namespace

void write_artifacts(const ExperimentReport& report, const ExperimentPlan& plan) {
  std::error_code ec;
  fs::create_directories(plan.output_dir, ec);
  if (ec || !fs::is_directory(plan.output_dir)) {
    throw std::runtime_error("cannot create output directory " + plan.output_dir.string());
  }
  if (plan.write_csv) {
    write_atomically(plan.output_dir / "summary.csv", [&](std::ostream& o) { write_summary_csv(o, report.summary); });
    write_atomically(plan.output_dir / "pvalues.csv", [&](std::ostream& o) { write_pvalues_csv(o, report.pvalues); });
    const fs::path conv = plan.output_dir / "convergence";
    fs::create_directories(conv, ec);
    if (ec) throw std::runtime_error("cannot create " + conv.string());
    for (const auto& cell : report.cells) {
      const std::string name = std::string(to_string(cell.algo)) + "_" + to_string(cell.func) + ".csv";
      write_atomically(conv / name, [&](std::ostream& o) { write_convergence_csv(o, cell); });
    }
  }
  if (plan.write_json) {
    const auto doc = to_json(report, plan);
    write_atomically(plan.output_dir / "results.json", [&](std::ostream& o) { o << doc.dump() << '\n'; });
  }
}

ExperimentReport run_experiment(const ExperimentPlan& plan) {
  plan.validate();
  auto cells = plan.parallel
                   ? run_grid_parallel(plan.algorithms, plan.functions, plan.config, plan.params, plan.threads)
                   : run_grid_serial(plan.algorithms, plan.functions, plan.config, plan.params);
  ExperimentReport report = tabulate(std::move(cells), plan.algorithms);
  write_artifacts(report, plan);
  return report;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// strtod rather than stod: stod rejects subnormal values.
double parse_double(const std::string& text, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": not a number: '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* required : {"algo", "func", "avg"}) {
    if (!col.count(required)) throw std::runtime_error(std::string("CSV is missing the '") + required + "' column");
  }

  std::vector<SummaryRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) throw std::runtime_error("line " + std::to_string(line_no) + ": wrong field count");
    SummaryRow r;
    r.algo = f[col["algo"]];
    r.func = f[col["func"]];
    r.avg = parse_double(f[col["avg"]], line_no);
    if (col.count("std")) r.std = parse_double(f[col["std"]], line_no);
    if (col.count("best")) r.best = parse_double(f[col["best"]], line_no);
    if (col.count("worst")) r.worst = parse_double(f[col["worst"]], line_no);
    if (col.count("n_runs")) r.n_runs = static_cast<std::size_t>(parse_double(f[col["n_runs"]], line_no));
    if (col.count("seed")) r.seed = std::stoull(f[col["seed"]]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryRow> read_summary_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return read_summary_csv(in);
}

ResultsGrid to_results_grid(const std::vector<SummaryRow>& rows) {
  ResultsGrid grid;
  for (const auto& r : rows) grid[r.func][r.algo] = r.avg;
  return grid;
}

ComparisonReport compare_to_reference(const std::vector<SummaryRow>& summary) {
  std::map<std::string, const reference::ClassicalRow*> published;
  for (const auto& row : reference::classical_table()) published[std::string(row.func)] = &row;
  auto reference_avg = [&](const std::string& func, const std::string& algo) -> std::optional<double> {
    const auto it = published.find(func);
    if (it == published.end()) return std::nullopt;
    if (algo == "cddo-hs") return it->second->cddo_hs.avg;
    if (algo == "cddo") return it->second->cddo.avg;
    if (algo == "hs") return it->second->hs.avg;
    return std::nullopt;
  };

  ComparisonReport report;
  const ResultsGrid grid = to_results_grid(summary);
  constexpr double kFloor = 1e-300;
  for (const auto& [func, cells] : grid) {
    for (Algorithm a : kAllAlgorithms) {
      const std::string name(to_string(a));
      const auto it = cells.find(name);
      if (it == cells.end()) continue;
      ComparisonRow row{func, name, it->second, reference_avg(func, name), std::nullopt};
      if (row.reference_avg) {
        const double m = std::abs(row.measured_avg);
        const double p = std::abs(*row.reference_avg);
        row.log10_gap = (m == 0.0 && p == 0.0)
                            ? 0.0
                            : std::abs(std::log10(std::max(m, kFloor)) - std::log10(std::max(p, kFloor)));
      }
      report.rows.push_back(std::move(row));
    }

    const auto hybrid = cells.find("cddo-hs");
    if (hybrid != cells.end()) {
      if (auto hs = cells.find("hs"); hs != cells.end() && hybrid->second < hs->second) ++report.wins_vs_hs;
      if (auto cd = cells.find("cddo"); cd != cells.end() && hybrid->second < cd->second) ++report.wins_vs_cddo;
    }

    // Winner among the algorithms present in both tables.
    std::string measured_winner;
    double measured_best = 0.0;
    double reference_best = 0.0;
    bool have_reference = false;
    for (Algorithm a : kAllAlgorithms) {
      const std::string name(to_string(a));
      const auto it = cells.find(name);
      const auto pub = reference_avg(func, name);
      if (it == cells.end() || !pub) continue;
      if (measured_winner.empty() || it->second < measured_best) {
        measured_winner = name;
        measured_best = it->second;
      }
      if (!have_reference || *pub < reference_best) reference_best = *pub;
      have_reference = true;
    }
    if (!have_reference) continue;
    FunctionVerdict verdict{func, measured_winner, "", false};
    for (Algorithm a : kAllAlgorithms) {
      const std::string name(to_string(a));
      const auto pub = reference_avg(func, name);
      if (!cells.count(name) || !pub || *pub != reference_best) continue;
      if (!verdict.reference_winners.empty()) verdict.reference_winners += '|';
      verdict.reference_winners += name;
      if (name == measured_winner) verdict.agree = true;
    }
    if (verdict.agree) ++report.agreements;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
  out << "func,algo,measured_avg,reference_avg,log10_gap\n";
  for (const auto& r : report.rows) {
    out << r.func << ',' << r.algo << ',' << format_real(r.measured_avg) << ','
        << (r.reference_avg ? format_real(*r.reference_avg) : "") << ',' << (r.log10_gap ? format_real(*r.log10_gap) : "")
        << '\n';
  }
  out << "\nfunc,measured_winner,reference_winner,agree\n";
  for (const auto& v : report.verdicts) {
    out << v.func << ',' << v.measured_winner << ',' << v.reference_winners << ',' << (v.agree ? "yes" : "no") << '\n';
  }
  out << "\nmetric,value\n";
  out << "wins_vs_hs," << report.wins_vs_hs << '\n';
  out << "wins_vs_cddo," << report.wins_vs_cddo << '\n';
  out << "winner_agreements," << report.agreements << '\n';
}

}  // namespace cddohs
