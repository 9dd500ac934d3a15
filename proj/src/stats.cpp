#include "linrep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace linrep {

double quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile: empty list");
  const double pos = static_cast<double>(sorted.size() - 1) * p;
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(i);
  return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

ValueStats summary_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summary_stats: empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return ValueStats{sorted.front(), quantile(sorted, 0.25), quantile(sorted, 0.5),
                    quantile(sorted, 0.75), sorted.back()};
}

std::vector<std::uint32_t> rank_competitors(std::span<const ValueStats> stats) {
  std::vector<std::uint32_t> order(stats.size());
  std::iota(order.begin(), order.end(), 0u);
  const auto key = [&](std::uint32_t i) {
    return std::make_tuple(stats[i].median, stats[i].q1, stats[i].q3, stats[i].min,
                           stats[i].max);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
  std::vector<std::uint32_t> ranks(stats.size());
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = pos + 1;
  return ranks;
}

}  // namespace linrep
