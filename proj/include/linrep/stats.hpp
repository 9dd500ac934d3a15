#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace linrep {

// Five-number summary.
struct ValueStats {
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;

  bool operator==(const ValueStats&) const = default;
};

// Quantile at fractional position (count - 1) * p with linear interpolation
// between order statistics; input must be sorted ascending and nonempty.
double quantile(std::span<const double> sorted, double p);

// Throws std::invalid_argument on an empty list.
ValueStats summary_stats(std::span<const double> values);

// 1-based ranks under the lexicographic order (median, q1, q3, min, max),
// smaller is better; full ties keep input order. The result is a permutation
// of 1..size.
std::vector<std::uint32_t> rank_competitors(std::span<const ValueStats> stats);

}  // namespace linrep
