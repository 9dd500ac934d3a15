#include <algorithm>
#include <set>

#include "doctest.h"
#include "linrep/bitvec.hpp"
#include "linrep/gf2_matrix.hpp"
#include "linrep/hamming.hpp"
#include "linrep/rng.hpp"

using namespace linrep;

TEST_CASE("bit vector integer conversions use big-endian bit 0") {
  const BitVector x = BitVector::from_string("101");
  CHECK(x.to_integer() == 5);
  CHECK(x.get(0));
  CHECK_FALSE(x.get(1));
  CHECK(BitVector::from_integer(5, 3) == x);
  CHECK(BitVector::from_integer(1, 4).to_string() == "0001");
  CHECK(x.to_string() == "101");
}

TEST_CASE("xor is addition mod 2 and self-inverse") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const BitVector x = rng.bits(130);
    CHECK((x ^ x).weight() == 0);
    CHECK((x ^ BitVector(130)) == x);
  }
  CHECK_THROWS_AS(BitVector(3) ^ BitVector(4), std::invalid_argument);
}

TEST_CASE("raw blocks slice across word boundaries") {
  Rng rng(11);
  const BitVector x = rng.bits(200);
  for (std::size_t pos : {0u, 7u, 60u, 63u, 64u, 127u, 185u}) {
    const std::uint64_t raw = x.raw_block(pos, 15);
    for (std::size_t j = 0; j < 15; ++j) CHECK(((raw >> j) & 1u) == x.get(pos + j));
  }
}

TEST_CASE("hamming distance counts differing positions") {
  CHECK(hamming_distance(BitVector::from_string("000"), BitVector::from_string("000")) == 0);
  CHECK(hamming_distance(BitVector::from_string("101"), BitVector::from_string("011")) == 2);
  CHECK_THROWS_AS(hamming_distance(BitVector(3), BitVector(4)), std::invalid_argument);

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BitVector x = rng.bits(97);
    BitVector y = x;
    const std::size_t i = rng.below(97);
    y.flip(i);
    CHECK(hamming_distance(x, y) == 1);
    CHECK(hamming_distance(y, x) == 1);
  }
}

TEST_CASE("matrix-vector product over GF(2)") {
  const GF2Matrix a = GF2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.column(0).to_string() == "10");
  CHECK(a.column(2).to_string() == "11");

  CHECK(mat_vec_mul(a, BitVector::from_string("101")).to_string() == "01");
  CHECK(mat_vec_mul(a, BitVector(3)).to_integer() == 0);
  for (std::uint32_t i = 0; i < 3; ++i) {
    BitVector e(3);
    e.set(i, true);
    CHECK(mat_vec_mul(a, e) == a.column(i));
  }
  CHECK_THROWS_AS(mat_vec_mul(a, BitVector(4)), std::invalid_argument);
}

TEST_CASE("matrix-vector product is additive") {
  Rng rng(17);

  SUBCASE("exhaustive over a random 3x6 matrix") {
    GF2Matrix a(3, 6);
    for (std::uint32_t c = 0; c < 6; ++c)
      a.set_column_bits(c, static_cast<std::uint32_t>(rng.below(8)));
    for (std::uint64_t xv = 0; xv < 64; ++xv)
      for (std::uint64_t yv = 0; yv < 64; ++yv) {
        const BitVector x = BitVector::from_integer(xv, 6);
        const BitVector y = BitVector::from_integer(yv, 6);
        CHECK(mat_vec_mul(a, x ^ y) == (mat_vec_mul(a, x) ^ mat_vec_mul(a, y)));
      }
  }

  SUBCASE("random triples on an 8x12 matrix") {
    GF2Matrix a(8, 12);
    for (std::uint32_t c = 0; c < 12; ++c)
      a.set_column_bits(c, static_cast<std::uint32_t>(rng.below(256)));
    for (int trial = 0; trial < 200; ++trial) {
      const BitVector x = rng.bits(12);
      const BitVector y = rng.bits(12);
      CHECK(mat_vec_mul(a, x ^ y) == (mat_vec_mul(a, x) ^ mat_vec_mul(a, y)));
    }
  }
}

TEST_CASE("sphere enumeration") {
  const BitVector x = BitVector::from_string("010");

  SUBCASE("radius zero yields only the center") {
    const auto sphere = enumerate_sphere(x, 0);
    REQUIRE(sphere.size() == 1);
    CHECK(sphere[0] == x);
  }

  SUBCASE("radius one yields the unit flips in lexicographic flip order") {
    const auto sphere = enumerate_sphere(x, 1);
    REQUIRE(sphere.size() == 3);
    CHECK(sphere[0].to_string() == "110");
    CHECK(sphere[1].to_string() == "000");
    CHECK(sphere[2].to_string() == "011");
    for (const BitVector& y : sphere) CHECK(hamming_distance(x, y) == 1);
  }

  SUBCASE("radius out of range is rejected") {
    CHECK_THROWS_AS(enumerate_sphere(x, 4), std::invalid_argument);
  }

  SUBCASE("C(15,3) distinct points at distance 3") {
    Rng rng(5);
    const BitVector center = rng.bits(15);
    std::set<std::string> seen;
    for_each_sphere_point(center, 3, [&](const BitVector& y) {
      CHECK(hamming_distance(center, y) == 3);
      seen.insert(y.to_string());
    });
    CHECK(seen.size() == 455);
    CHECK(binomial(15, 3) == 455);
  }

  SUBCASE("ball of radius 1 has n + 1 points") {
    Rng rng(6);
    for (std::size_t n : {1u, 5u, 17u, 64u, 101u}) {
      const BitVector center = rng.bits(n);
      std::set<std::string> ball{center.to_string()};
      for_each_sphere_point(center, 1, [&](const BitVector& y) { ball.insert(y.to_string()); });
      CHECK(ball.size() == n + 1);
    }
  }
}

TEST_CASE("combination unranking matches enumeration order") {
  const std::uint32_t n = 9, r = 4;
  std::uint64_t rank = 0;
  for_each_combination(n, r, [&](std::span<const std::uint32_t> c) {
    const auto unranked = unrank_combination(n, r, rank);
    CHECK(std::equal(c.begin(), c.end(), unranked.begin(), unranked.end()));
    ++rank;
  });
  CHECK(rank == binomial(n, r));
  CHECK_THROWS_AS(unrank_combination(n, r, rank), std::invalid_argument);
}

TEST_CASE("binomial saturates at the cap") {
  CHECK(binomial(15, 3) == 455);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(810, 3, 1'000'000) == 1'000'000);
  CHECK(binomial(64, 32, 2'000'000'000ull) == 2'000'000'000ull);
}

TEST_CASE("identical seeds give identical streams") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next();
    CHECK(va == b.next());
    if (va != c.next()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("derived seeds depend on every part") {
  const std::uint64_t s1 = derive_seed(1, {10, 20, 30});
  CHECK(s1 == derive_seed(1, {10, 20, 30}));
  CHECK(s1 != derive_seed(2, {10, 20, 30}));
  CHECK(s1 != derive_seed(1, {10, 20, 31}));
  CHECK(s1 != derive_seed(1, {20, 10, 30}));
}

TEST_CASE("bounded sampling stays in range and permutations are complete") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
  const auto perm = rng.permutation(12);
  std::set<std::uint32_t> seen(perm.begin(), perm.end());
  CHECK(seen.size() == 12);
  const auto sample = rng.distinct(81, 10);
  CHECK(sample.size() == 10);
  CHECK(std::set<std::uint32_t>(sample.begin(), sample.end()).size() == 10);
}
