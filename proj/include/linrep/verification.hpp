#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrep/representation.hpp"

namespace linrep {

// The enumeration kernels below run either as a plain serial loop or with
// OpenMP. Both paths produce identical results; the unit tests and the
// benchmark target compare them.
enum class Exec { Serial, Parallel };

struct EnumerationLimits {
  std::uint32_t max_cube_bits = 24;           // full-cube scans up to 2^24 points
  std::uint64_t max_sphere_points = 10'000'000;
};

// decode restricted to every radius-1 ball is a bijection onto the category
// set. Linear representations are decided algebraically (one ball suffices by
// linearity); other kinds enumerate the full cube, subject to the limits.
bool is_locally_bijective(const Representation& rep, Exec exec = Exec::Parallel,
                          const EnumerationLimits& limits = {});

// decode restricted to every radius-1 ball covers all categories.
bool is_locally_surjective(const Representation& rep, Exec exec = Exec::Parallel,
                           const EnumerationLimits& limits = {});

// The same two properties decided by cube enumeration alone, with no
// linear-map shortcut. Kept as the independent route for the tests.
bool is_locally_bijective_by_enumeration(const Representation& rep,
                                         Exec exec = Exec::Parallel,
                                         const EnumerationLimits& limits = {});
bool is_locally_surjective_by_enumeration(const Representation& rep,
                                          Exec exec = Exec::Parallel,
                                          const EnumerationLimits& limits = {});

// Exhaustive preimage sizes: entry j is |decode^-1(j)| over the whole cube.
std::vector<std::uint64_t> representative_counts(const Representation& rep,
                                                 Exec exec = Exec::Parallel,
                                                 const EnumerationLimits& limits = {});
std::uint64_t count_representatives(const Representation& rep, std::uint32_t category,
                                    Exec exec = Exec::Parallel,
                                    const EnumerationLimits& limits = {});

// Entry c is |{x' in S(center, radius) : decode(x') = c}|; the counts sum to
// C(n, radius). Guarded by limits.max_sphere_points.
std::vector<std::uint64_t> isotropy_profile(const Representation& rep,
                                            const BitVector& center, std::uint32_t radius,
                                            Exec exec = Exec::Parallel,
                                            const EnumerationLimits& limits = {});

// Samples random centers and profiles every feasible radius, checking that
// all categories other than the center's own always receive equal counts.
struct IsotropyCheck {
  bool balanced = true;
  std::uint32_t samples = 0;
  std::uint32_t radii_checked = 0;
  // First imbalance found, for reporting.
  std::string center;
  std::uint32_t radius = 0;
  std::vector<std::uint64_t> counts;
};

IsotropyCheck check_empirical_isotropy(const Representation& rep, std::uint32_t samples,
                                       std::uint64_t seed, Exec exec = Exec::Parallel,
                                       const EnumerationLimits& limits = {});

}  // namespace linrep
