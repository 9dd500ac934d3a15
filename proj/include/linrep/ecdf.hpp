#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linrep/metaheuristics.hpp"

namespace linrep {

inline constexpr int kEcdfTargetCount = 50;

// 50 evenly spaced target values including both endpoints; all equal to lo
// when the range is degenerate. Requires lo <= hi.
std::vector<double> make_targets(double lo, double hi);

// Mean proportion of targets reached as a function of evaluations consumed.
// Proportions are nondecreasing; the curve ends at the last improvement made
// by any run.
struct EcdfCurve {
  struct Point {
    std::uint64_t evaluation;
    double proportion;
  };
  std::vector<Point> points;
};

// One point per distinct improvement index across the runs; at index t the
// proportion is the mean over runs of (reached targets at t) / target count.
// A target tau counts as reached once the run's best value is <= tau.
EcdfCurve compute_ecdf(std::span<const SearchTrace> traces, std::span<const double> targets);

}  // namespace linrep
