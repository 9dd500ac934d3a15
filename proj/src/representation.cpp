#include "linrep/representation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace linrep {

const char* to_string(RepKind kind) {
  switch (kind) {
    case RepKind::Linear: return "linear";
    case RepKind::Direct: return "direct";
    case RepKind::Unary: return "unary";
  }
  return "?";
}

RepKind rep_kind_from_string(std::string_view s) {
  if (s == "linear") return RepKind::Linear;
  if (s == "direct") return RepKind::Direct;
  if (s == "unary") return RepKind::Unary;
  throw std::invalid_argument("unknown representation kind: " + std::string(s));
}

std::uint32_t code_bits_for(std::uint32_t categories) {
  if (categories < 2) throw std::invalid_argument("representation needs at least 2 categories");
  return static_cast<std::uint32_t>(std::bit_width(categories - 1));
}

namespace {

std::vector<std::uint64_t> build_row_masks(const GF2Matrix& m) {
  if (m.cols() > 64) return {};
  std::vector<std::uint64_t> masks(m.rows(), 0);
  for (std::uint32_t r = 0; r < m.rows(); ++r)
    for (std::uint32_t c = 0; c < m.cols(); ++c)
      if (m.entry(r, c)) masks[r] |= std::uint64_t{1} << c;
  return masks;
}

void check_all_nonzero_columns(const GF2Matrix& m) {
  const std::uint32_t k = m.rows();
  const std::uint64_t expect = (std::uint64_t{1} << k) - 1;
  if (m.cols() != expect)
    throw std::invalid_argument("linear representation: matrix must have 2^k - 1 columns");
  std::vector<std::uint32_t> cols(m.cols());
  for (std::uint32_t c = 0; c < m.cols(); ++c) cols[c] = m.column_bits(c);
  std::sort(cols.begin(), cols.end());
  for (std::uint32_t c = 0; c < m.cols(); ++c)
    if (cols[c] != c + 1)
      throw std::invalid_argument(
          "linear representation: columns must be exactly the nonzero k-bit patterns");
}

}  // namespace

Representation Representation::linear(std::uint32_t categories) {
  const std::uint32_t k = code_bits_for(categories);
  const std::uint32_t n = (1u << k) - 1;
  GF2Matrix m(k, n);
  // Canonical column order: column i carries the pattern of i + 1.
  for (std::uint32_t c = 0; c < n; ++c) m.set_column_bits(c, c + 1);
  return linear_with_matrix(categories, std::move(m));
}

Representation Representation::linear_with_matrix(std::uint32_t categories, GF2Matrix matrix) {
  const std::uint32_t k = code_bits_for(categories);
  if (matrix.rows() != k)
    throw std::invalid_argument("linear representation: matrix rows must equal code bits");
  check_all_nonzero_columns(matrix);
  Representation r;
  r.kind_ = RepKind::Linear;
  r.categories_ = categories;
  r.code_bits_ = k;
  r.bits_ = (1u << k) - 1;
  r.row_masks_ = build_row_masks(matrix);
  r.matrix_ = std::move(matrix);
  return r;
}

Representation Representation::direct(std::uint32_t categories) {
  Representation r;
  r.kind_ = RepKind::Direct;
  r.categories_ = categories;
  r.code_bits_ = code_bits_for(categories);
  r.bits_ = r.code_bits_;
  return r;
}

Representation Representation::unary(std::uint32_t categories) {
  if (categories < 2) throw std::invalid_argument("representation needs at least 2 categories");
  Representation r;
  r.kind_ = RepKind::Unary;
  r.categories_ = categories;
  r.code_bits_ = 0;
  r.bits_ = categories - 1;
  return r;
}

Representation Representation::make(RepKind kind, std::uint32_t categories) {
  switch (kind) {
    case RepKind::Linear: return linear(categories);
    case RepKind::Direct: return direct(categories);
    case RepKind::Unary: return unary(categories);
  }
  throw std::invalid_argument("bad representation kind");
}

const GF2Matrix& Representation::matrix() const {
  if (kind_ != RepKind::Linear)
    throw std::logic_error("matrix() is only defined for the linear representation");
  return matrix_;
}

std::uint32_t Representation::decode(const BitVector& x) const {
  if (x.size() != bits_) throw std::invalid_argument("decode: genotype length mismatch");
  switch (kind_) {
    case RepKind::Linear: {
      if (bits_ <= 64) return decode_raw(x.raw_block(0, bits_));
      std::uint32_t y = 0;
      x.for_each_set_bit(
          [&](std::size_t i) { y ^= matrix_.column_bits(static_cast<std::uint32_t>(i)); });
      return y % categories_;
    }
    case RepKind::Direct:
      return static_cast<std::uint32_t>(x.to_integer() % categories_);
    case RepKind::Unary:
      return static_cast<std::uint32_t>(x.weight());
  }
  return 0;
}

std::uint32_t Representation::decode_raw(std::uint64_t raw) const {
  switch (kind_) {
    case RepKind::Linear: {
      std::uint32_t y = 0;
      for (std::uint32_t r = 0; r < code_bits_; ++r)
        y |= static_cast<std::uint32_t>(std::popcount(raw & row_masks_[r]) & 1)
             << (code_bits_ - 1 - r);
      return y % categories_;
    }
    case RepKind::Direct: {
      std::uint64_t value = 0;
      for (std::uint32_t j = 0; j < bits_; ++j)
        value |= ((raw >> j) & 1u) << (bits_ - 1 - j);
      return static_cast<std::uint32_t>(value % categories_);
    }
    case RepKind::Unary:
      return static_cast<std::uint32_t>(std::popcount(raw));
  }
  return 0;
}

BitVector Representation::representative(std::uint32_t category) const {
  if (category >= categories_)
    throw std::invalid_argument("representative: category out of range");
  BitVector x(bits_);
  switch (kind_) {
    case RepKind::Linear: {
      if (category == 0) return x;
      for (std::uint32_t c = 0; c < bits_; ++c)
        if (matrix_.column_bits(c) == category) {
          x.set(c, true);
          return x;
        }
      throw std::logic_error("representative: missing column pattern");
    }
    case RepKind::Direct:
      return BitVector::from_integer(category, bits_);
    case RepKind::Unary:
      for (std::uint32_t i = 0; i < category; ++i) x.set(i, true);
      return x;
  }
  return x;
}

std::vector<std::uint32_t> Representation::neighbor_categories(const BitVector& x) const {
  if (x.size() != bits_)
    throw std::invalid_argument("neighbor_categories: genotype length mismatch");
  std::vector<std::uint32_t> out(bits_);
  BitVector y = x;
  for (std::uint32_t i = 0; i < bits_; ++i) {
    y.flip(i);
    out[i] = decode(y);
    y.flip(i);
  }
  return out;
}

std::string Representation::id() const { return to_string(kind_); }

CategoricalCodec::CategoricalCodec(Representation rep, std::uint32_t variables)
    : rep_(std::move(rep)), variables_(variables) {
  if (variables == 0) throw std::invalid_argument("codec needs at least one variable");
  if (rep_.categories() > 0xffffu)
    throw std::invalid_argument("codec supports at most 65535 categories");
  const std::uint32_t n = rep_.bits();
  if (n >= 1 && n <= 16) {
    table_.resize(std::size_t{1} << n);
    for (std::size_t raw = 0; raw < table_.size(); ++raw)
      table_[raw] = static_cast<std::uint16_t>(rep_.decode_raw(raw));
  }
}

void CategoricalCodec::decode_into(const BitVector& x, std::span<std::uint16_t> out) const {
  if (x.size() != total_bits())
    throw std::invalid_argument("decode_vector: bit string length mismatch");
  if (out.size() != variables_)
    throw std::invalid_argument("decode_vector: output length mismatch");
  const std::uint32_t n = rep_.bits();
  if (!table_.empty()) {
    for (std::uint32_t v = 0; v < variables_; ++v)
      out[v] = table_[x.raw_block(std::size_t{v} * n, n)];
    return;
  }
  if (n <= 64) {
    for (std::uint32_t v = 0; v < variables_; ++v)
      out[v] = static_cast<std::uint16_t>(rep_.decode_raw(x.raw_block(std::size_t{v} * n, n)));
    return;
  }
  BitVector block(n);
  for (std::uint32_t v = 0; v < variables_; ++v) {
    for (std::uint32_t j = 0; j < n; ++j) block.set(j, x.get(std::size_t{v} * n + j));
    out[v] = static_cast<std::uint16_t>(rep_.decode(block));
  }
}

std::vector<std::uint16_t> CategoricalCodec::decode_vector(const BitVector& x) const {
  std::vector<std::uint16_t> out(variables_);
  decode_into(x, out);
  return out;
}

BitVector CategoricalCodec::encode(std::span<const std::uint16_t> categories) const {
  if (categories.size() != variables_)
    throw std::invalid_argument("encode: category vector length mismatch");
  const std::uint32_t n = rep_.bits();
  BitVector x(total_bits());
  for (std::uint32_t v = 0; v < variables_; ++v) {
    const BitVector block = rep_.representative(categories[v]);
    for (std::uint32_t j = 0; j < n; ++j)
      if (block.get(j)) x.set(std::size_t{v} * n + j, true);
  }
  return x;
}

}  // namespace linrep
