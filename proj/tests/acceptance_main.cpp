// Acceptance suite: structural checks run exactly, stochastic checks run at
// desk scale with fixed seeds. One PASS/FAIL line per criterion; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linrep/campaign.hpp"
#include "linrep/ecdf.hpp"
#include "linrep/hamming.hpp"
#include "linrep/stats.hpp"
#include "linrep/verification.hpp"

using namespace linrep;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

bool expect(bool condition, const std::string& what, std::string& detail) {
  if (!condition && detail.empty()) detail = what;
  return condition;
}

// --- 1. worked 2x3 example -------------------------------------------------

bool criterion_worked_example(std::string& detail) {
  const Representation rep =
      Representation::linear_with_matrix(4, GF2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}));
  const BitVector x = BitVector::from_string("101");
  bool ok = expect(rep.decode(x) == 1, "decode(101) != pattern 01", detail);
  const auto neighbors = rep.neighbor_categories(x);
  ok &= expect(neighbors == std::vector<std::uint32_t>{3, 0, 2},
               "neighbor categories != {11, 00, 10}", detail);
  return ok;
}

// --- 2. local bijectivity --------------------------------------------------

bool criterion_local_bijectivity(std::string& detail) {
  bool ok = true;
  for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
    ok &= expect(is_locally_bijective_by_enumeration(Representation::linear(n)),
                 "linear N=" + std::to_string(n) + " not locally bijective", detail);
  }
  ok &= expect(!is_locally_bijective_by_enumeration(Representation::linear(9)),
               "linear N=9 claims local bijectivity", detail);
  ok &= expect(is_locally_surjective_by_enumeration(Representation::linear(9)),
               "linear N=9 not locally surjective", detail);
  ok &= expect(!is_locally_bijective_by_enumeration(Representation::direct(4)),
               "direct N=4 claims local bijectivity", detail);
  ok &= expect(!is_locally_bijective_by_enumeration(Representation::unary(4)),
               "unary N=4 claims local bijectivity", detail);
  return ok;
}

// --- 3. uniform redundancy -------------------------------------------------

bool criterion_redundancy(std::string& detail) {
  bool ok = true;
  for (std::uint32_t k : {1u, 2u, 3u, 4u}) {
    const std::uint32_t n_categories = 1u << k;
    const std::uint32_t n = n_categories - 1;
    const std::uint64_t expected = std::uint64_t{1} << (n - k);
    const auto counts = representative_counts(Representation::linear(n_categories));
    for (std::uint32_t c = 0; c < n_categories; ++c)
      ok &= expect(counts[c] == expected,
                   "k=" + std::to_string(k) + ": category " + std::to_string(c) + " has " +
                       std::to_string(counts[c]) + " representatives, expected " +
                       std::to_string(expected),
                   detail);
  }
  return ok;
}

// --- 4. isotropy counts ----------------------------------------------------

bool criterion_isotropy(std::string& detail) {
  const Representation rep = Representation::linear(16);
  Rng rng(2024);
  bool ok = true;
  for (int sample = 0; sample < 10; ++sample) {
    const BitVector center = rng.bits(15);
    const auto counts = isotropy_profile(rep, center, 3);
    const std::uint32_t own = rep.decode(center);
    std::uint64_t total = 0;
    for (std::uint32_t c = 0; c < 16; ++c) {
      total += counts[c];
      ok &= expect(counts[c] == (c == own ? 35u : 28u),
                   "N=16 r=3: category count " + std::to_string(counts[c]) +
                       " at category " + std::to_string(c),
                   detail);
    }
    ok &= expect(total == 455, "sphere total != 455", detail);
  }
  // Empirical balance over all radii (an open conjecture): reported only, a
  // failure here is a finding rather than a defect.
  for (std::uint32_t k : {2u, 3u, 4u}) {
    const auto check = check_empirical_isotropy(Representation::linear(1u << k), 10, 7000 + k);
    if (check.balanced) {
      std::printf("       [report] empirical isotropy holds for N=%u over %u sampled spheres\n",
                  1u << k, check.radii_checked);
    } else {
      std::printf("       [report] FINDING: imbalance at N=%u, radius %u, center %s\n",
                  1u << k, check.radius, check.center.c_str());
    }
  }
  return ok;
}

// --- 5. objective spot values ----------------------------------------------

bool criterion_sudoku_objective(std::string& detail) {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const SudokuGrid board = generate_complete_board(rng);
    ok &= expect(violations(board) == 0, "generated board scores nonzero", detail);
    SudokuGrid corrupted = board;
    const int cell = static_cast<int>(rng.below(81));
    corrupted.cells[cell] =
        static_cast<std::uint8_t>(1 + (board.cells[cell] % 9));  // any different digit
    ok &= expect(violations(corrupted) == 6, "single corruption does not score 6", detail);
  }
  SudokuGrid ones;
  ones.cells.fill(1);
  ok &= expect(violations(ones) == 432, "all-ones board does not score 432", detail);
  return ok;
}

// --- helpers for the campaign criteria --------------------------------------

std::vector<NamedInstance> generated_instances(int count, int erase, std::uint64_t seed,
                                               const std::string& prefix) {
  std::vector<NamedInstance> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    const SudokuGrid board = generate_complete_board(rng);
    out.push_back({prefix + "-" + std::to_string(i), erase_cells(board, erase, rng)});
  }
  return out;
}

AlgorithmConfig algo(Algorithm a) {
  AlgorithmConfig cfg;
  cfg.algorithm = a;
  return cfg;
}

// --- 6. fixed-target desk experiment ----------------------------------------

bool criterion_fixed_target(std::string& detail) {
  CampaignPlan plan;
  plan.protocol = Protocol::FixedTarget;
  plan.algorithms = {algo(Algorithm::Rls), algo(Algorithm::Hc), algo(Algorithm::Ea1p1)};
  plan.representations = {RepKind::Direct, RepKind::Linear};
  plan.budget = 1'000'000;
  plan.runs = 100;
  plan.seed = 61;
  plan.workers = 4;
  const CampaignResult result = run_campaign(plan, generated_instances(4, 3, 6100, "target3"));

  // success rate per competitor, runtime stats per (competitor, instance)
  std::map<std::string, std::uint64_t> successes, totals;
  std::map<std::string, std::vector<double>> rls_linear_runtimes;
  for (const RunRecord& rec : result.records) {
    const std::string competitor =
        result.competitor_id(rec.algorithm_index, rec.representation_index);
    ++totals[competitor];
    if (rec.success) ++successes[competitor];
    if (competitor == "rls-linear" && rec.success)
      rls_linear_runtimes[result.instance_name(rec.instance_index)].push_back(
          static_cast<double>(rec.runtime));
  }
  bool ok = true;
  for (const auto& [competitor, total] : totals) {
    const double rate = static_cast<double>(successes[competitor]) / total;
    std::printf("       [report] %-14s success %5.1f%%\n", competitor.c_str(), 100 * rate);
    ok &= expect(rate >= 0.99,
                 competitor + " success rate " + std::to_string(rate) + " < 0.99", detail);
  }
  for (const auto& [instance, runtimes] : rls_linear_runtimes) {
    const double median = summary_stats(runtimes).median;
    std::printf("       [report] rls-linear median runtime on %s: %.1f\n", instance.c_str(),
                median);
    ok &= expect(median < 1000,
                 "rls-linear median runtime " + std::to_string(median) + " >= 1000 on " +
                     instance,
                 detail);
  }
  return ok;
}

// --- 7. fixed-budget directional check ---------------------------------------

bool criterion_fixed_budget_direction(std::string& detail) {
  const auto instances = generated_instances(1, 54, 7100, "budget54");
  int seeds_with_direction = 0;
  for (std::uint64_t master : {71u, 72u, 73u}) {
    CampaignPlan plan;
    plan.protocol = Protocol::FixedBudget;
    plan.algorithms = {algo(Algorithm::Sa), algo(Algorithm::Ea1p1)};
    plan.representations = {RepKind::Direct, RepKind::Linear};
    plan.budget = 300'000;
    plan.runs = 20;
    plan.seed = master;
    plan.workers = 4;
    const CampaignResult result = run_campaign(plan, instances);

    std::map<std::string, std::vector<double>> values;
    for (const RunRecord& rec : result.records)
      values[result.competitor_id(rec.algorithm_index, rec.representation_index)].push_back(
          rec.best_value);
    bool direction = true;
    for (const char* name : {"sa", "ea-1p1"}) {
      const double linear = summary_stats(values[std::string(name) + "-linear"]).median;
      const double direct = summary_stats(values[std::string(name) + "-direct"]).median;
      std::printf("       [report] seed %llu %-6s median linear %.1f vs direct %.1f\n",
                  static_cast<unsigned long long>(master), name, linear, direct);
      if (!(linear <= direct)) direction = false;
    }
    if (direction) ++seeds_with_direction;
  }
  return expect(seeds_with_direction >= 2,
                "directional advantage held for only " +
                    std::to_string(seeds_with_direction) + " of 3 seeds",
                detail);
}

// --- 8. ranking kernel golden test -------------------------------------------

bool criterion_ranking_golden(std::string& detail) {
  const std::vector<ValueStats> published{
      {4, 4, 4, 6, 8},        {4, 8, 8, 12.5, 14},    {4, 8, 10, 12, 16},
      {6, 9.5, 10, 12, 18},   {4, 9.5, 12, 14, 18},   {10, 13.5, 14, 16, 18},
      {8, 13.5, 17, 18, 24},  {12, 18, 19, 20, 24},   {14, 18, 21, 22, 28},
      {10, 18, 22, 24.5, 30}, {16, 20, 22, 26, 28},   {14, 20, 23, 26, 32},
      {12, 21.5, 24, 26.5, 32}, {16, 22, 24, 26, 34}, {22, 24, 25, 26.5, 30},
      {20, 25.5, 28, 28.5, 38}, {26, 31, 32, 36, 38}, {26, 28, 33, 36, 42},
      {28, 31.5, 36, 36.5, 42}, {28, 34, 36, 36, 38}, {30, 35.5, 36, 38, 40},
      {42, 49.5, 52, 52, 56},
  };
  const auto ranks = rank_competitors(published);
  bool ok = true;
  for (std::size_t i = 0; i < published.size(); ++i)
    ok &= expect(ranks[i] == i + 1,
                 "published row " + std::to_string(i + 1) + " ranked " +
                     std::to_string(ranks[i]),
                 detail);
  return ok;
}

// --- 9. ecdf kernel -----------------------------------------------------------

bool criterion_ecdf_kernel(std::string& detail) {
  SearchTrace t;
  t.improvements = {{1, 40}, {10, 20}, {100, 0}};
  const auto targets = make_targets(0, 49);
  const EcdfCurve curve = compute_ecdf(std::vector<SearchTrace>{t}, targets);
  bool ok = expect(curve.points.size() == 3, "expected 3 curve points", detail);
  if (ok) {
    ok &= expect(curve.points[0].proportion == 10.0 / 50, "proportion at t=1 != 10/50", detail);
    ok &= expect(curve.points[1].proportion == 30.0 / 50, "proportion at t=10 != 30/50", detail);
    ok &= expect(curve.points[2].proportion == 50.0 / 50, "proportion at t=100 != 50/50", detail);
  }
  // monotonicity over stochastic traces
  CampaignPlan plan;
  plan.protocol = Protocol::Ecdf;
  plan.algorithms = {algo(Algorithm::Rls), algo(Algorithm::Umda)};
  plan.representations = {RepKind::Direct, RepKind::Linear};
  plan.budget = 3000;
  plan.runs = 5;
  plan.seed = 91;
  const CampaignResult result = run_campaign(plan, generated_instances(1, 12, 9100, "ecdf12"));
  for (const auto& instance_report : ecdf_report(result))
    for (const auto& [competitor, curve2] : instance_report.curves)
      for (std::size_t i = 1; i < curve2.points.size(); ++i)
        ok &= expect(curve2.points[i].proportion >= curve2.points[i - 1].proportion,
                     competitor + ": ecdf proportion decreased", detail);
  return ok;
}

// --- 10. determinism across worker counts --------------------------------------

bool criterion_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  CampaignPlan plan;
  plan.protocol = Protocol::FixedTarget;
  plan.algorithms = {algo(Algorithm::Rls), algo(Algorithm::Ea1p1), algo(Algorithm::Sa)};
  plan.representations = {RepKind::Direct, RepKind::Linear};
  plan.budget = 100'000;
  plan.runs = 25;
  plan.seed = 101;

  std::array<std::string, 2> runs_csv;
  int i = 0;
  for (std::uint32_t workers : {1u, 8u}) {
    plan.workers = workers;
    const CampaignResult result =
        run_campaign(plan, generated_instances(2, 4, 10100, "det4"));
    const fs::path dir =
        fs::temp_directory_path() / ("linrep_acceptance_w" + std::to_string(workers));
    fs::remove_all(dir);
    write_campaign_outputs(result, dir.string());
    std::ifstream in(dir / "runs.csv", std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    runs_csv[i++] = ss.str();
  }
  bool ok = expect(!runs_csv[0].empty(), "runs.csv is empty", detail);
  ok &= expect(runs_csv[0] == runs_csv[1],
               "runs.csv differs between 1 and 8 workers", detail);
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"worked 2x3 example: decode and neighbors", criterion_worked_example},
      {"local bijectivity across kinds and sizes", criterion_local_bijectivity},
      {"uniform redundancy 2^(n-k) for power-of-two N", criterion_redundancy},
      {"isotropy counts 35/28 at N=16, r=3", criterion_isotropy},
      {"sudoku objective spot values (0 / 6 / 432)", criterion_sudoku_objective},
      {"fixed-target desk experiment (r=3, 6 competitors)", criterion_fixed_target},
      {"fixed-budget direction: linear medians <= direct", criterion_fixed_budget_direction},
      {"ranking kernel reproduces the published row order", criterion_ranking_golden},
      {"ecdf kernel worked example and monotonicity", criterion_ecdf_kernel},
      {"byte-identical runs.csv for 1 vs 8 workers", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %2zu. %s (%.1f ms)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  return failures;
}
