#include "linrep/verification.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "linrep/errors.hpp"
#include "linrep/hamming.hpp"
#include "linrep/rng.hpp"

namespace linrep {

namespace {

void check_cube_guard(const Representation& rep, const EnumerationLimits& limits) {
  if (rep.bits() > limits.max_cube_bits)
    throw ResourceError("enumeration over 2^" + std::to_string(rep.bits()) +
                        " points exceeds the cube limit of 2^" +
                        std::to_string(limits.max_cube_bits));
}

// Scans the whole cube and tests every radius-1 ball with a stamp array
// (seen[c] == stamp marks category c as seen for the current center).
// `need_distinct` decides bijectivity, otherwise coverage.
bool scan_balls(const Representation& rep, bool need_distinct, Exec exec) {
  const std::uint32_t n = rep.bits();
  const std::uint32_t cats = rep.categories();
  const std::uint64_t points = std::uint64_t{1} << n;
  if (need_distinct && n + 1 != cats) return false;
  if (!need_distinct && n + 1 < cats) return false;

  std::atomic<bool> ok{true};
  const auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> seen(cats, 0);
    std::uint64_t stamp = 0;
    for (std::uint64_t x = lo; x < hi && ok.load(std::memory_order_relaxed); ++x) {
      ++stamp;
      std::uint32_t distinct = 0;
      const std::uint32_t own = rep.decode_raw(x);
      seen[own] = stamp;
      ++distinct;
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t c = rep.decode_raw(x ^ (std::uint64_t{1} << i));
        if (seen[c] == stamp) {
          if (need_distinct) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
        } else {
          seen[c] = stamp;
          ++distinct;
        }
      }
      if (distinct != cats) {
        ok.store(false, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (exec == Exec::Serial) {
    scan_range(0, points);
  } else {
#pragma omp parallel
    {
      const int nt = omp_get_num_threads();
      const int tid = omp_get_thread_num();
      const std::uint64_t chunk = (points + nt - 1) / nt;
      const std::uint64_t lo = std::min<std::uint64_t>(points, chunk * tid);
      const std::uint64_t hi = std::min<std::uint64_t>(points, lo + chunk);
      scan_range(lo, hi);
    }
  }
  return ok.load();
}

bool linear_locally_bijective(const Representation& rep) {
  // Columns are all nonzero k-bit patterns by construction, so by linearity
  // one ball decides: the ball around 0 decodes to {0} u {column patterns}.
  if (rep.categories() != (1u << rep.code_bits())) return false;
  if (rep.bits() + 1 != rep.categories()) return false;
  std::vector<bool> seen(rep.categories(), false);
  seen[rep.decode_raw(0)] = true;
  for (std::uint32_t i = 0; i < rep.bits(); ++i) {
    const std::uint32_t c = rep.decode_raw(std::uint64_t{1} << i);
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

bool linear_locally_surjective(const Representation& rep, const EnumerationLimits& limits) {
  // decode over the ball around x depends on x only through y = A x, and y
  // ranges over all k-bit patterns, so scanning the 2^k code words suffices.
  const std::uint32_t k = rep.code_bits();
  const std::uint32_t n = rep.bits();
  const std::uint32_t cats = rep.categories();
  const std::uint64_t work = (std::uint64_t{1} << k) * (n + 1);
  if (work > (std::uint64_t{1} << limits.max_cube_bits) * 32)
    throw ResourceError("linear surjectivity scan exceeds the enumeration limit");
  std::vector<std::uint64_t> seen(cats, 0);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) {
    const std::uint64_t stamp = y + 1;
    std::uint32_t covered = 1;
    seen[y % cats] = stamp;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t c =
          static_cast<std::uint32_t>((y ^ rep.matrix().column_bits(i)) % cats);
      if (seen[c] != stamp) {
        seen[c] = stamp;
        ++covered;
      }
    }
    if (covered != cats) return false;
  }
  return true;
}

}  // namespace

bool is_locally_bijective(const Representation& rep, Exec exec,
                          const EnumerationLimits& limits) {
  if (rep.kind() == RepKind::Linear) return linear_locally_bijective(rep);
  return is_locally_bijective_by_enumeration(rep, exec, limits);
}

bool is_locally_surjective(const Representation& rep, Exec exec,
                           const EnumerationLimits& limits) {
  if (rep.kind() == RepKind::Linear) return linear_locally_surjective(rep, limits);
  return is_locally_surjective_by_enumeration(rep, exec, limits);
}

bool is_locally_bijective_by_enumeration(const Representation& rep, Exec exec,
                                         const EnumerationLimits& limits) {
  check_cube_guard(rep, limits);
  return scan_balls(rep, /*need_distinct=*/true, exec);
}

bool is_locally_surjective_by_enumeration(const Representation& rep, Exec exec,
                                          const EnumerationLimits& limits) {
  check_cube_guard(rep, limits);
  return scan_balls(rep, /*need_distinct=*/false, exec);
}

std::vector<std::uint64_t> representative_counts(const Representation& rep, Exec exec,
                                                 const EnumerationLimits& limits) {
  check_cube_guard(rep, limits);
  const std::uint64_t points = std::uint64_t{1} << rep.bits();
  const std::uint32_t cats = rep.categories();
  std::vector<std::uint64_t> counts(cats, 0);

  if (exec == Exec::Serial) {
    for (std::uint64_t x = 0; x < points; ++x) ++counts[rep.decode_raw(x)];
    return counts;
  }

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(cats, 0);
#pragma omp for nowait
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(points); ++x)
      ++local[rep.decode_raw(static_cast<std::uint64_t>(x))];
#pragma omp critical(linrep_rep_counts)
    for (std::uint32_t c = 0; c < cats; ++c) counts[c] += local[c];
  }
  return counts;
}

std::uint64_t count_representatives(const Representation& rep, std::uint32_t category,
                                    Exec exec, const EnumerationLimits& limits) {
  if (category >= rep.categories())
    throw std::invalid_argument("count_representatives: category out of range");
  return representative_counts(rep, exec, limits)[category];
}

namespace {

// Category of the center with the bits at `flips` toggled, in O(|flips|).
struct FlipDecoder {
  const Representation& rep;
  const BitVector& center;
  std::uint32_t base_linear = 0;   // A * center (k-bit pattern)
  std::uint64_t base_direct = 0;   // big-endian integer of center
  std::uint64_t base_weight = 0;

  explicit FlipDecoder(const Representation& r, const BitVector& x) : rep(r), center(x) {
    switch (rep.kind()) {
      case RepKind::Linear:
        x.for_each_set_bit([&](std::size_t i) {
          base_linear ^= rep.matrix().column_bits(static_cast<std::uint32_t>(i));
        });
        break;
      case RepKind::Direct:
        base_direct = x.to_integer();
        break;
      case RepKind::Unary:
        base_weight = x.weight();
        break;
    }
  }

  std::uint32_t operator()(std::span<const std::uint32_t> flips) const {
    switch (rep.kind()) {
      case RepKind::Linear: {
        std::uint32_t y = base_linear;
        for (std::uint32_t i : flips) y ^= rep.matrix().column_bits(i);
        return y % rep.categories();
      }
      case RepKind::Direct: {
        std::uint64_t v = base_direct;
        for (std::uint32_t i : flips) v ^= std::uint64_t{1} << (rep.bits() - 1 - i);
        return static_cast<std::uint32_t>(v % rep.categories());
      }
      case RepKind::Unary: {
        std::uint64_t w = base_weight;
        for (std::uint32_t i : flips) w = center.get(i) ? w - 1 : w + 1;
        return static_cast<std::uint32_t>(w);
      }
    }
    return 0;
  }
};

}  // namespace

std::vector<std::uint64_t> isotropy_profile(const Representation& rep,
                                            const BitVector& center, std::uint32_t radius,
                                            Exec exec, const EnumerationLimits& limits) {
  const std::uint32_t n = rep.bits();
  if (center.size() != n)
    throw std::invalid_argument("isotropy_profile: center length mismatch");
  if (radius > n) throw std::invalid_argument("isotropy_profile: radius out of range");
  const std::uint64_t points = binomial(n, radius, limits.max_sphere_points + 1);
  if (points > limits.max_sphere_points)
    throw ResourceError("sphere of " + std::to_string(points) +
                        "+ points exceeds the enumeration budget");

  const FlipDecoder decode(rep, center);
  const std::uint32_t cats = rep.categories();
  std::vector<std::uint64_t> counts(cats, 0);

  if (exec == Exec::Serial || radius == 0) {
    for_each_combination(n, radius,
                         [&](std::span<const std::uint32_t> flips) { ++counts[decode(flips)]; });
    return counts;
  }

#pragma omp parallel
  {
    const int nt = omp_get_num_threads();
    const int tid = omp_get_thread_num();
    const std::uint64_t chunk = (points + nt - 1) / nt;
    const std::uint64_t lo = std::min<std::uint64_t>(points, chunk * tid);
    const std::uint64_t hi = std::min<std::uint64_t>(points, lo + chunk);
    std::vector<std::uint64_t> local(cats, 0);
    if (lo < hi) {
      std::vector<std::uint32_t> comb = unrank_combination(n, radius, lo);
      for (std::uint64_t r = lo; r < hi; ++r) {
        ++local[decode(comb)];
        if (!next_combination(comb, n)) break;
      }
    }
#pragma omp critical(linrep_isotropy)
    for (std::uint32_t c = 0; c < cats; ++c) counts[c] += local[c];
  }
  return counts;
}

IsotropyCheck check_empirical_isotropy(const Representation& rep, std::uint32_t samples,
                                       std::uint64_t seed, Exec exec,
                                       const EnumerationLimits& limits) {
  Rng rng(seed);
  IsotropyCheck report;
  report.samples = samples;
  const std::uint32_t n = rep.bits();
  for (std::uint32_t s = 0; s < samples; ++s) {
    const BitVector center = rng.bits(n);
    const std::uint32_t own = rep.decode(center);
    for (std::uint32_t r = 0; r <= n; ++r) {
      if (binomial(n, r, limits.max_sphere_points + 1) > limits.max_sphere_points) continue;
      const auto counts = isotropy_profile(rep, center, r, exec, limits);
      ++report.radii_checked;
      std::uint64_t other = 0;
      bool seeded = false;
      for (std::uint32_t c = 0; c < rep.categories(); ++c) {
        if (c == own) continue;
        if (!seeded) {
          other = counts[c];
          seeded = true;
        } else if (counts[c] != other) {
          report.balanced = false;
          report.center = center.to_string();
          report.radius = r;
          report.counts = counts;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace linrep
