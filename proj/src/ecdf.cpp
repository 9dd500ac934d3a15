#include "linrep/ecdf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace linrep {

std::vector<double> make_targets(double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("make_targets: lo > hi");
  std::vector<double> targets(kEcdfTargetCount, lo);
  if (lo == hi) return targets;
  const double step = (hi - lo) / (kEcdfTargetCount - 1);
  for (int i = 0; i < kEcdfTargetCount; ++i) targets[i] = lo + step * i;
  targets.back() = hi;
  return targets;
}

EcdfCurve compute_ecdf(std::span<const SearchTrace> traces, std::span<const double> targets) {
  if (traces.empty()) throw std::invalid_argument("compute_ecdf: no traces");
  for (const SearchTrace& t : traces)
    if (t.improvements.empty())
      throw std::invalid_argument("compute_ecdf: trace without improvements");
  if (targets.empty()) throw std::invalid_argument("compute_ecdf: no targets");

  std::vector<double> sorted_targets(targets.begin(), targets.end());
  std::sort(sorted_targets.begin(), sorted_targets.end());

  std::vector<std::uint64_t> indices;
  for (const SearchTrace& t : traces)
    for (const auto& imp : t.improvements) indices.push_back(imp.evaluation);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  const auto reached = [&](double best) -> std::size_t {
    return static_cast<std::size_t>(
        sorted_targets.end() -
        std::lower_bound(sorted_targets.begin(), sorted_targets.end(), best));
  };

  std::vector<std::size_t> cursor(traces.size(), 0);
  EcdfCurve curve;
  curve.points.reserve(indices.size());
  for (std::uint64_t t : indices) {
    double total = 0;
    for (std::size_t r = 0; r < traces.size(); ++r) {
      const auto& imps = traces[r].improvements;
      while (cursor[r] + 1 < imps.size() && imps[cursor[r] + 1].evaluation <= t) ++cursor[r];
      const bool started = imps[cursor[r]].evaluation <= t;
      const double best =
          started ? imps[cursor[r]].value : std::numeric_limits<double>::infinity();
      total += static_cast<double>(reached(best));
    }
    curve.points.push_back(
        {t, total / (static_cast<double>(traces.size()) *
                     static_cast<double>(sorted_targets.size()))});
  }
  return curve;
}

}  // namespace linrep
