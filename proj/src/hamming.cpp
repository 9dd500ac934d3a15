#include "linrep/hamming.hpp"

#include <stdexcept>

namespace linrep {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) is exact before the division: it equals
    // C(n - r + i, i) * i!
    const unsigned __int128 t = static_cast<unsigned __int128>(result) * (n - r + i) / i;
    if (t >= cap) return cap;
    result = static_cast<std::uint64_t>(t);
  }
  return result;
}

bool next_combination(std::span<std::uint32_t> c, std::uint32_t n) {
  const std::size_t r = c.size();
  if (r == 0) return false;
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (c[i] != n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t r,
                                              std::uint64_t rank) {
  if (r > n) throw std::invalid_argument("unrank_combination: r > n");
  std::vector<std::uint32_t> c(r);
  std::uint32_t x = 0;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (;;) {
      if (x >= n) throw std::invalid_argument("unrank_combination: rank out of range");
      const std::uint64_t count = binomial(n - 1 - x, r - 1 - i);
      if (rank < count) break;
      rank -= count;
      ++x;
    }
    c[i] = x++;
  }
  if (rank != 0) throw std::invalid_argument("unrank_combination: rank out of range");
  return c;
}

std::vector<BitVector> enumerate_sphere(const BitVector& x, std::uint32_t r) {
  if (r > x.size()) throw std::invalid_argument("enumerate_sphere: radius out of range");
  std::vector<BitVector> points;
  points.reserve(binomial(x.size(), r, 1u << 20));
  for_each_sphere_point(x, r, [&](const BitVector& y) { points.push_back(y); });
  return points;
}

}  // namespace linrep
