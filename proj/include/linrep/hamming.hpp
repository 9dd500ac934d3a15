#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linrep/bitvec.hpp"

namespace linrep {

// C(n, r), saturating at cap instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r,
                       std::uint64_t cap = ~std::uint64_t{0});

// Advance `c` (an ascending index combination out of [0, n)) to its
// lexicographic successor; false once the last combination has been seen.
bool next_combination(std::span<std::uint32_t> c, std::uint32_t n);

// Combination of size r out of [0, n) with the given lexicographic rank.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t r,
                                              std::uint64_t rank);

// Visit every size-r index combination out of [0, n) in lexicographic order.
template <typename Fn>
void for_each_combination(std::uint32_t n, std::uint32_t r, Fn&& fn) {
  if (r > n) return;
  std::vector<std::uint32_t> c(r);
  for (std::uint32_t i = 0; i < r; ++i) c[i] = i;
  do {
    fn(std::span<const std::uint32_t>(c));
  } while (next_combination(std::span<std::uint32_t>(c), n));
}

// Visit every vector at Hamming distance exactly r from x (the sphere
// S(x, r)), ordered lexicographically by flipped index set. The reference is
// mutated in place around each call, so fn must not retain the vector.
template <typename Fn>
void for_each_sphere_point(const BitVector& x, std::uint32_t r, Fn&& fn) {
  BitVector y = x;
  for_each_combination(static_cast<std::uint32_t>(x.size()), r,
                       [&](std::span<const std::uint32_t> flips) {
                         for (std::uint32_t i : flips) y.flip(i);
                         fn(static_cast<const BitVector&>(y));
                         for (std::uint32_t i : flips) y.flip(i);
                       });
}

// Materialized sphere; requires 0 <= r <= x.size().
std::vector<BitVector> enumerate_sphere(const BitVector& x, std::uint32_t r);

}  // namespace linrep
