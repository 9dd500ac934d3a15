// Times the serial reference paths against their OpenMP counterparts and
// checks that both produce identical results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "linrep/campaign.hpp"
#include "linrep/verification.hpp"

using namespace linrep;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-38s %10.1f ms %10.1f ms %7.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

void bench_cube_scan() {
  // 2^24-point cube scan (the guard limit).
  const Representation rep = Representation::unary(25);
  std::vector<std::uint64_t> serial, parallel;
  const double ts = time_ms([&] { serial = representative_counts(rep, Exec::Serial); });
  const double tp = time_ms([&] { parallel = representative_counts(rep, Exec::Parallel); });
  report("representative_counts unary N=25", ts, tp, serial == parallel);
}

void bench_ball_scan() {
  // The property holds, so the scan has no early exit and visits every ball.
  const Representation rep = Representation::linear(16);
  bool serial = false, parallel = false;
  const double ts =
      time_ms([&] { serial = is_locally_bijective_by_enumeration(rep, Exec::Serial); });
  const double tp =
      time_ms([&] { parallel = is_locally_bijective_by_enumeration(rep, Exec::Parallel); });
  report("ball bijectivity scan linear N=16", ts, tp, serial == parallel);
}

void bench_sphere_scan() {
  // C(31, 8) = 7888725 sphere points.
  const Representation rep = Representation::linear(32);
  Rng rng(1);
  const BitVector center = rng.bits(rep.bits());
  std::vector<std::uint64_t> serial, parallel;
  const double ts = time_ms([&] { serial = isotropy_profile(rep, center, 8, Exec::Serial); });
  const double tp = time_ms([&] { parallel = isotropy_profile(rep, center, 8, Exec::Parallel); });
  report("isotropy_profile linear N=32 r=8", ts, tp, serial == parallel);
}

void bench_campaign() {
  Rng rng(7);
  const SudokuGrid board = generate_complete_board(rng);
  std::vector<NamedInstance> instances{{"bench", erase_cells(board, 10, rng)}};

  CampaignPlan plan;
  plan.protocol = Protocol::FixedTarget;
  AlgorithmConfig rls;
  rls.algorithm = Algorithm::Rls;
  plan.algorithms = {rls};
  plan.representations = {RepKind::Direct, RepKind::Linear};
  plan.budget = 50'000;
  plan.runs = 16;
  plan.seed = 99;

  std::string serial_csv, parallel_csv;
  plan.workers = 1;
  const double ts = time_ms([&] {
    const CampaignResult r = run_campaign(plan, instances);
    std::ostringstream ss;
    write_runs_csv(ss, r);
    serial_csv = ss.str();
  });
  plan.workers = static_cast<std::uint32_t>(std::max(1, omp_get_num_procs()));
  const double tp = time_ms([&] {
    const CampaignResult r = run_campaign(plan, instances);
    std::ostringstream ss;
    write_runs_csv(ss, r);
    parallel_csv = ss.str();
  });
  report("fixed-target campaign r=10, 32 runs", ts, tp, serial_csv == parallel_csv);
}

}  // namespace

int main() {
  std::printf("OpenMP max threads: %d\n\n", omp_get_max_threads());
  std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
  bench_cube_scan();
  bench_ball_scan();
  bench_sphere_scan();
  bench_campaign();
  return 0;
}
