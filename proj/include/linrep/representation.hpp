#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "linrep/gf2_matrix.hpp"

namespace linrep {

enum class RepKind { Linear, Direct, Unary };

const char* to_string(RepKind kind);
RepKind rep_kind_from_string(std::string_view s);

// Binary encoding of a categorical domain of N values as bit strings of a
// fixed width n. decode() maps every n-bit string onto a category in [0, N).
//
//   linear: n = 2^k - 1 bits for the smallest k with N <= 2^k; the genotype
//           is multiplied by a k x n matrix whose columns are all nonzero
//           k-bit patterns, and the k-bit result is wrapped mod N. Flipping
//           any single bit changes the product by one column, so every other
//           category stays reachable in one mutation.
//   direct: n = k bits read as an integer, wrapped mod N.
//   unary:  n = N - 1 bits; the category is the Hamming weight.
class Representation {
 public:
  static Representation linear(std::uint32_t categories);
  // Same map with a caller-supplied matrix; its columns must be exactly the
  // nonzero k-bit patterns, in any order.
  static Representation linear_with_matrix(std::uint32_t categories, GF2Matrix matrix);
  static Representation direct(std::uint32_t categories);
  static Representation unary(std::uint32_t categories);
  static Representation make(RepKind kind, std::uint32_t categories);

  RepKind kind() const { return kind_; }
  std::uint32_t categories() const { return categories_; }  // N
  std::uint32_t bits() const { return bits_; }              // n, genotype width
  std::uint32_t code_bits() const { return code_bits_; }    // k (0 for unary)
  const GF2Matrix& matrix() const;                          // linear only

  std::uint32_t decode(const BitVector& x) const;
  // decode on the little-endian raw form of a genotype; requires bits() <= 64.
  // This is the hot path of the block codec and the enumeration kernels.
  std::uint32_t decode_raw(std::uint64_t raw) const;
  // A genotype that decodes to the given category.
  BitVector representative(std::uint32_t category) const;
  // Entry i is decode(x with bit i flipped).
  std::vector<std::uint32_t> neighbor_categories(const BitVector& x) const;

  std::string id() const;  // "linear" / "direct" / "unary"

 private:
  Representation() = default;

  RepKind kind_ = RepKind::Direct;
  std::uint32_t categories_ = 0;
  std::uint32_t bits_ = 0;
  std::uint32_t code_bits_ = 0;
  GF2Matrix matrix_;                       // linear only
  std::vector<std::uint64_t> row_masks_;   // linear, raw-form parity masks (bits() <= 64)
};

// Smallest k with categories <= 2^k; categories >= 2.
std::uint32_t code_bits_for(std::uint32_t categories);

// Per-variable block layout: m variables, all with the same representation,
// concatenated into one string of m * rep.bits() bits. Variable v occupies
// bits [v*n, (v+1)*n).
class CategoricalCodec {
 public:
  CategoricalCodec(Representation rep, std::uint32_t variables);

  const Representation& representation() const { return rep_; }
  std::uint32_t variables() const { return variables_; }
  std::uint32_t bits_per_variable() const { return rep_.bits(); }
  std::size_t total_bits() const {
    return static_cast<std::size_t>(variables_) * rep_.bits();
  }

  void decode_into(const BitVector& x, std::span<std::uint16_t> out) const;
  std::vector<std::uint16_t> decode_vector(const BitVector& x) const;
  // Concatenation of per-variable representatives; decodes back to the input.
  BitVector encode(std::span<const std::uint16_t> categories) const;

 private:
  Representation rep_;
  std::uint32_t variables_;
  std::vector<std::uint16_t> table_;  // raw block -> category, when n <= 16
};

}  // namespace linrep
