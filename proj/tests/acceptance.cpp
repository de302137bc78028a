// Acceptance checks. Prints one PASS/FAIL line per criterion, with detail
// lines underneath, and exits nonzero when any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cddohs/harness.hpp"
#include "cddohs/reference.hpp"
#include "cddohs/stats.hpp"
#include "oracles.hpp"

using namespace cddohs;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kBaseSeed = 20230815;

int failures = 0;

void detail(const char* fmt, auto... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

bool report(const char* label, bool ok, double seconds) {
  std::printf("%s %s (%.2f s)\n", ok ? "PASS" : "FAIL", label, seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
  return ok;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Cell& find_cell(const std::vector<Cell>& cells, Algorithm a, FunctionId f) {
  for (const Cell& c : cells) {
    if (c.algo == a && c.func == f) return c;
  }
  throw std::logic_error("missing cell");
}

std::vector<double> finals(const Cell& cell) {
  std::vector<double> v;
  for (const auto& r : cell.runs) v.push_back(r.best_fitness);
  return v;
}

double mean_of(const Cell& cell) { return summarize(finals(cell)).avg; }

bool rounds_to(double value, double printed, int digits) {
  char a[64], b[64];
  std::snprintf(a, sizeof a, "%.*g", digits, value);
  std::snprintf(b, sizeof b, "%.*g", digits, printed);
  return std::string(a) == b;
}

// 1. Evaluating at the canonical minimizers.
void optimum_certification() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Point {
    FunctionId id;
    std::vector<double> x;
    double tol;
  };
  auto fill = [](FunctionId id, double v) { return std::vector<double>(spec_of(id).dim, v); };
  const std::vector<Point> points{
      {FunctionId::F1, fill(FunctionId::F1, 0.0), 1e-6},
      {FunctionId::F2, fill(FunctionId::F2, 0.0), 1e-6},
      {FunctionId::F3, fill(FunctionId::F3, 0.0), 1e-6},
      {FunctionId::F4, fill(FunctionId::F4, 0.0), 1e-6},
      {FunctionId::F5, fill(FunctionId::F5, 1.0), 1e-6},
      {FunctionId::F6, fill(FunctionId::F6, 0.0), 1e-6},
      {FunctionId::F9, fill(FunctionId::F9, 0.0), 1e-6},
      {FunctionId::F10, fill(FunctionId::F10, 0.0), 1e-6},
      {FunctionId::F11, fill(FunctionId::F11, 0.0), 1e-6},
      {FunctionId::F12, fill(FunctionId::F12, -1.0), 1e-6},
      {FunctionId::F13, fill(FunctionId::F13, 1.0), 1e-6},
      {FunctionId::F16, {0.08984201, -0.71265640}, 1e-3},
      {FunctionId::F17, {3.14159265358979, 2.275}, 1e-3},
      {FunctionId::F18, {0.0, -1.0}, 1e-6},
      {FunctionId::F19, {0.114614, 0.555649, 0.852547}, 1e-3},
      {FunctionId::F8, fill(FunctionId::F8, 420.968746), 1e-3},
      {FunctionId::F14, {-31.97833, -31.97833}, 1e-3},
      {FunctionId::F15, {0.192833, 0.190836, 0.123117, 0.135766}, 1e-3},
  };
  // Significant digits of the tabulated f_min where it is coarser than 1e-3.
  const std::map<FunctionId, int> printed_digits{{FunctionId::F14, 1}, {FunctionId::F19, 3}};
  bool ok = true;
  for (const auto& p : points) {
    const double value = evaluate_at(p.id, p.x);
    const double f_min = spec_of(p.id).f_min;
    const double gap = std::abs(value - f_min);
    const char* verdict = "ok";
    if (gap > p.tol) {
      // Tabulated values printed with fewer digits than the tolerance are
      // matched at their printed precision.
      const auto printed = printed_digits.find(p.id);
      const bool rounds = printed != printed_digits.end() && rounds_to(value, f_min, printed->second);
      verdict = rounds ? "ok at printed precision" : "MISS";
      ok = ok && rounds;
    }
    detail("%-4s f(x*) = %.10g  f_min = %.6g  |gap| = %.3g  tol %.0e  %s", to_string(p.id).c_str(), value, f_min,
           gap, p.tol, verdict);
  }
  const auto [x16, best16] = oracle::grid_refine_2d(
      [](double a, double b) { return evaluate_formula(FunctionId::F16, std::vector<double>{a, b}); }, -5.0, 5.0);
  const bool grid_ok = std::abs(best16 - spec_of(FunctionId::F16).f_min) <= 1e-3;
  ok = ok && grid_ok;
  detail("F16 grid-search minimum %.10g at (%.5f, %.5f)  %s", best16, x16[0], x16[1], grid_ok ? "ok" : "MISS");
  report("1 optimum certification", ok, since(t0));
}

// 2 and 3, 4 and the supplementary bands share one full grid.
void quality(const std::vector<Cell>& cells, double grid_seconds) {
  {
    struct Band {
      FunctionId id;
      const char* text;
      bool (*check)(double);
    };
    const Band bands[] = {
        {FunctionId::F1, "mean <= 1e-6", [](double m) { return m <= 1e-6; }},
        {FunctionId::F11, "mean <= 1e-12", [](double m) { return m <= 1e-12; }},
        {FunctionId::F16, "|mean + 1.0316| <= 1e-3", [](double m) { return std::abs(m + 1.0316) <= 1e-3; }},
        {FunctionId::F10, "mean <= 1e-8", [](double m) { return m <= 1e-8; }},
    };
    bool ok = true;
    for (const Band& b : bands) {
      const double m = mean_of(find_cell(cells, Algorithm::cddo_hs, b.id));
      const bool hit = b.check(m);
      ok = ok && hit;
      detail("cddo-hs %-4s mean = %.6e  (%s)  %s", to_string(b.id).c_str(), m, b.text, hit ? "ok" : "MISS");
    }
    report("2 hybrid quality bands", ok, grid_seconds);
  }
  {
    std::size_t better = 0, significant = 0;
    for (const auto& s : benchmark_specs()) {
      const Cell& h = find_cell(cells, Algorithm::cddo_hs, s.id);
      const Cell& b = find_cell(cells, Algorithm::hs, s.id);
      const double mh = mean_of(h), mb = mean_of(b);
      const double p = wilcoxon_rank_sum(finals(h), finals(b));
      const bool win = mh < mb;
      better += win ? 1 : 0;
      significant += win && p < 0.05 ? 1 : 0;
      detail("%-4s cddo-hs %.6e  hs %.6e  p = %.3e  %s", to_string(s.id).c_str(), mh, mb, p,
             win ? (p < 0.05 ? "better, significant" : "better") : "not better");
    }
    detail("better on %zu of 19 (need >= 12), significant on %zu (need >= 10)", better, significant);
    report("3 baseline separation", better >= 12 && significant >= 10, grid_seconds);
  }
  {
    const double m = mean_of(find_cell(cells, Algorithm::hs, FunctionId::F1));
    detail("hs F1 mean = %.6e (band [1e1, 1e4])", m);
    report("4 HS sanity band", m >= 1e1 && m <= 1e4, 0.0);
  }
  {
    bool ok = true;
    const double cddo16 = mean_of(find_cell(cells, Algorithm::cddo, FunctionId::F16));
    const bool a = std::abs(cddo16 + 1.0316) <= 0.05;
    detail("cddo    F16 mean = %.6e (within 0.05 of -1.0316)  %s", cddo16, a ? "ok" : "MISS");
    const double hs16 = mean_of(find_cell(cells, Algorithm::hs, FunctionId::F16));
    const bool b = std::abs(hs16 + 1.0316) <= 1e-3;
    detail("hs      F16 mean = %.6e (within 1e-3 of -1.0316)  %s", hs16, b ? "ok" : "MISS");
    const double sd = summarize(finals(find_cell(cells, Algorithm::cddo_hs, FunctionId::F16))).std;
    const bool c = sd <= 1e-4;
    detail("cddo-hs F16 std  = %.6e (<= 1e-4)  %s", sd, c ? "ok" : "MISS");
    ok = a && b && c;
    report("supplementary per-algorithm F16 bands", ok, 0.0);
  }
}

// 5. Small-sample p-values against brute-force enumeration.
void wilcoxon_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(kBaseSeed);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t na = 2 + gen() % 7, nb = 2 + gen() % 7;
    std::vector<double> a(na), b(nb);
    const bool ties = trial % 3 == 0;
    for (auto& v : a) v = ties ? static_cast<double>(gen() % 4) : std::ldexp(static_cast<double>(gen() >> 11), -53);
    for (auto& v : b) v = ties ? static_cast<double>(gen() % 4) : std::ldexp(static_cast<double>(gen() >> 11), -53) + 0.2;
    bool constant = true;
    for (double v : a) constant = constant && v == a[0];
    for (double v : b) constant = constant && v == a[0];
    const double expected = constant ? 1.0 : oracle::rank_sum_p_enumerated(a, b);
    worst = std::max(worst, std::abs(wilcoxon_rank_sum(a, b) - expected));
  }
  const double fixed = wilcoxon_rank_sum(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
  detail("200 random pairs: max |p - oracle| = %.3e (tol 0.05)", worst);
  detail("[1,2,3] vs [4,5,6]: p = %.12f (expect 0.1)", fixed);
  report("5 Wilcoxon oracle equivalence", worst <= 0.05 && std::abs(fixed - 0.1) <= 1e-12, since(t0));
}

// 6. Placement scores on the published CEC table.
void ranking() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto table = rank_algorithms(reference::cec_results_grid());
  bool ok = true;
  std::string best, worst;
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < reference::kCecAlgorithms.size(); ++i) {
    const std::string name(reference::kCecAlgorithms[i]);
    const double s = table.score_of(name);
    const double expected = reference::kPublishedRankScores[i];
    const bool hit = std::abs(s - expected) <= 0.3;
    ok = ok && hit;
    if (s < lo) lo = s, best = name;
    if (s > hi) hi = s, worst = name;
    detail("%-8s score %.2f  published %.1f  %s", name.c_str(), s, expected, hit ? "ok" : "MISS");
  }
  detail("best %s, worst %s", best.c_str(), worst.c_str());
  report("6 ranking reproduction", ok && best == "CDDO-HS" && worst == "BOA", since(t0));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool monotone(const std::vector<double>& trace) {
  for (std::size_t t = 1; t < trace.size(); ++t) {
    if (trace[t] > trace[t - 1]) return false;
  }
  return true;
}

// 7. Determinism plus the invariant suite.
void determinism_and_invariants(const std::vector<Cell>& cells) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t broken = 0;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      ++broken;
      detail("violated: %s", what);
    }
  };

  // Rerun every cell on the serial path and compare traces.
  RunConfig config;
  config.base_seed = kBaseSeed;
  std::vector<FunctionId> funcs;
  for (const auto& s : benchmark_specs()) funcs.push_back(s.id);
  config.n_runs = 3;
  const auto again = run_grid_serial(kAllAlgorithms, funcs, config, AlgorithmParams{});
  bool identical = true;
  for (const Cell& c : again) {
    const Cell& full = find_cell(cells, c.algo, c.func);
    for (std::size_t r = 0; r < c.runs.size(); ++r) {
      identical = identical && c.runs[r].trace == full.runs[r].trace &&
                  c.runs[r].best_position == full.runs[r].best_position;
    }
  }
  expect(identical, "rerun traces identical");

  // Artifacts twice, once serial and once parallel.
  const fs::path base = fs::temp_directory_path() / "cddohs_acceptance";
  fs::remove_all(base);
  ExperimentPlan plan;
  plan.algorithms.assign(kAllAlgorithms.begin(), kAllAlgorithms.end());
  plan.functions = {FunctionId::F1, FunctionId::F7, FunctionId::F16};
  plan.config.base_seed = kBaseSeed;
  plan.config.max_iters = 100;
  plan.config.n_runs = 5;
  plan.output_dir = base / "a";
  plan.parallel = false;
  run_experiment(plan);
  plan.output_dir = base / "b";
  plan.parallel = true;
  run_experiment(plan);
  bool same_bytes = true;
  for (const auto& entry : fs::recursive_directory_iterator(base / "a")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), base / "a");
    same_bytes = same_bytes && slurp(entry.path()) == slurp(base / "b" / rel);
  }
  fs::remove_all(base);
  expect(same_bytes, "artifacts byte-identical");

  // Trace monotonicity, bound containment and eval accounting on the grid.
  for (const Cell& c : cells) {
    const Problem p = make_function(c.func);
    for (const auto& r : c.runs) {
      expect(r.trace.size() == 500 && monotone(r.trace), "trace monotone");
      expect(p.contains(r.best_position), "best inside bounds");
      expect(r.best_fitness == r.trace.back(), "best equals last trace value");
      if (c.algo == Algorithm::hs) expect(r.evals == 540, "hs evals");
    }
  }

  // Step-level invariants: PM capacity and elitism, branch ranges, bounds.
  for (FunctionId id : {FunctionId::F1, FunctionId::F8, FunctionId::F15, FunctionId::F19}) {
    const Problem p = make_function(id);
    for (std::size_t pm_size : {std::size_t{8}, hybrid_pm_size(40)}) {
      CddoParams params;
      params.pm_size = pm_size;
      Rng rng(kBaseSeed + pm_size);
      CddoState s = cddo_init(p, 40, pm_size, rng);
      HsParams hs;
      for (int t = 0; t < 100; ++t) {
        if (pm_size != 8) {
          const double before = s.pm.worst_fitness();
          refresh_pattern_memory(s.pm, hs, p, rng);
          expect(s.pm.worst_fitness() <= before, "pm worst never rises under refresh");
        }
        std::vector<AgentStep> log;
        const double g = s.gbest.fitness;
        const std::size_t evals = s.evals;
        cddo_step(s, p, params, rng, &log);
        std::size_t updates = 0;
        for (const auto& step : log) {
          if (step.branch == Branch::skill) {
            ++updates;
            expect(step.sr >= 0.6 && step.sr <= 1.0 && step.lr >= 0.6 && step.lr <= 1.0, "skill SR/LR in [0.6, 1]");
          } else if (step.branch == Branch::creativity) {
            ++updates;
            expect(step.sr >= 0.0 && step.sr <= 0.5, "creativity SR in [0, 0.5]");
          }
        }
        expect(s.evals - evals == updates, "one evaluation per update");
        expect(s.gbest.fitness <= g, "gbest monotone");
        expect(s.pm.size() == pm_size, "pm capacity");
        if (pm_size == 8) {
          expect(s.pm.best_fitness() == s.gbest.fitness, "pm holds gbest");
        } else {
          expect(s.pm.best_fitness() <= s.gbest.fitness, "pm at least as good as gbest");
        }
        double min_lbest = s.lbest.front().fitness;
        for (const auto& l : s.lbest) min_lbest = std::min(min_lbest, l.fitness);
        expect(s.gbest.fitness == min_lbest, "gbest is the best lbest");
        for (const auto& c : s.population) expect(p.contains(c.position), "agents inside bounds");
      }
    }
  }

  // HM monotonicity.
  {
    const Problem p = make_function(FunctionId::F9);
    Rng rng(kBaseSeed);
    HarmonyMemory hm = HarmonyMemory::random(p, 40, rng);
    for (int t = 0; t < 2000; ++t) {
      const double worst = hm.worst().fitness;
      Candidate c;
      c.position = improvise(hm.rows(), HsParams{}, p, rng);
      c.fitness = p.evaluate(c.position, rng);
      hm.replace_worst(c);
      expect(hm.worst().fitness <= worst, "hm worst never rises");
      expect(p.contains(c.position), "improvised inside bounds");
    }
  }

  // Reduction: the hybrid without refreshes is CDDO with pm_size 32.
  {
    RunConfig rc;
    rc.max_iters = 200;
    for (const auto& spec : benchmark_specs()) {
      const Problem p = make_function(spec.id);
      HybridParams hybrid;
      hybrid.refresh_count = 0;
      CddoParams cddo;
      cddo.pm_size = 32;
      expect(cddo_hs_run(p, rc, hybrid, kBaseSeed).trace == cddo_run(p, rc, cddo, kBaseSeed).trace,
             "hybrid with refresh disabled equals CDDO");
    }
  }

  detail("determinism: traces %s, artifacts %s; invariant violations: %zu", identical ? "identical" : "DIFFER",
         same_bytes ? "identical" : "DIFFER", broken);
  report("7 determinism and invariants", broken == 0, since(t0));
}

}  // namespace

int main() {
  optimum_certification();
  wilcoxon_oracle();
  ranking();

  RunConfig config;
  config.base_seed = kBaseSeed;
  std::vector<FunctionId> funcs;
  for (const auto& s : benchmark_specs()) funcs.push_back(s.id);
  const auto t0 = std::chrono::steady_clock::now();
  const auto cells = run_grid_parallel(kAllAlgorithms, funcs, config, AlgorithmParams{});
  const double grid_seconds = since(t0);
  detail("full grid: 3 x 19 x 30 runs, 500 iterations, base seed %llu, %.2f s",
         static_cast<unsigned long long>(kBaseSeed), grid_seconds);
  quality(cells, grid_seconds);
  determinism_and_invariants(cells);

  std::printf("%s: %d failing check(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
