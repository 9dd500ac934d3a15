#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linrep {

// Fixed-length bit vector over GF(2), packed 64 bits per word. Addition is
// xor. When a vector is read as an integer, bit 0 is the most significant
// bit, so (1,0,1) reads as the binary numeral 101 = 5.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  static BitVector from_string(std::string_view bits);
  static BitVector from_integer(std::uint64_t value, std::size_t len);
  // Little-endian raw form: bit i of the vector is bit i of `raw`.
  static BitVector from_raw(std::uint64_t raw, std::size_t len);
  static BitVector from_words(std::vector<std::uint64_t> words, std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    assert(i < len_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    assert(i < len_);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) {
    assert(i < len_);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  std::size_t weight() const;

  // Big-endian integer value of the whole vector; requires size() <= 64.
  std::uint64_t to_integer() const;

  // Little-endian view of bits [pos, pos + count): bit j of the result is
  // bit pos + j of the vector. Block decoders and the enumeration kernels
  // work on this raw form. Requires count <= 64.
  std::uint64_t raw_block(std::size_t pos, std::size_t count) const;

  template <typename Fn>
  void for_each_set_bit(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<std::size_t>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector&) const = default;

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }
  // Bits past len_ stay zero so word-wise == is value equality.
  void clear_tail();

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Number of differing positions; requires equal lengths.
std::size_t hamming_distance(const BitVector& x, const BitVector& y);

}  // namespace linrep
