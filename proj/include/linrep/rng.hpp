#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "linrep/bitvec.hpp"

namespace linrep {

// One step of the splitmix64 output function.
std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t fnv1a64(std::string_view s);

// Seed for one unit of work, derived by chained splitmix64 mixing so that
// child streams depend only on (master, parts), never on scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts);

// Deterministic generator: mt19937_64 plus hand-rolled sampling helpers, so
// identical seeds give identical streams on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound), bound >= 1. Masked rejection, unbiased.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  BitVector bits(std::size_t len);

  // r distinct values from [0, n), in draw order.
  std::vector<std::uint32_t> distinct(std::uint32_t n, std::uint32_t r);

  std::vector<std::uint32_t> permutation(std::uint32_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace linrep
