#include "linrep/rng.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace linrep {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  if (bound == 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const std::uint64_t mask = (bits == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  for (;;) {
    const std::uint64_t v = next() & mask;
    if (v < bound) return v;
  }
}

BitVector Rng::bits(std::size_t len) {
  std::vector<std::uint64_t> words((len + 63) / 64);
  for (auto& w : words) w = next();
  return BitVector::from_words(std::move(words), len);
}

std::vector<std::uint32_t> Rng::distinct(std::uint32_t n, std::uint32_t r) {
  if (r > n) throw std::invalid_argument("Rng::distinct: r > n");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < r; ++i) {
    const std::uint64_t j = i + below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(r);
  return pool;
}

std::vector<std::uint32_t> Rng::permutation(std::uint32_t n) { return distinct(n, n); }

}  // namespace linrep
