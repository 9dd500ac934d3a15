#include "linrep/bitvec.hpp"

#include <stdexcept>

namespace linrep {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector::from_string: expected only 0/1");
  }
  return v;
}

BitVector BitVector::from_integer(std::uint64_t value, std::size_t len) {
  if (len > 64) throw std::invalid_argument("BitVector::from_integer: len > 64");
  if (len < 64 && (value >> len) != 0)
    throw std::invalid_argument("BitVector::from_integer: value does not fit");
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i)
    v.set(i, (value >> (len - 1 - i)) & 1u);
  return v;
}

BitVector BitVector::from_raw(std::uint64_t raw, std::size_t len) {
  if (len > 64) throw std::invalid_argument("BitVector::from_raw: len > 64");
  if (len < 64 && (raw >> len) != 0)
    throw std::invalid_argument("BitVector::from_raw: value does not fit");
  BitVector v(len);
  if (len > 0) v.words_[0] = raw;
  return v;
}

BitVector BitVector::from_words(std::vector<std::uint64_t> words, std::size_t len) {
  if (words.size() != word_count(len))
    throw std::invalid_argument("BitVector::from_words: wrong word count");
  BitVector v;
  v.len_ = len;
  v.words_ = std::move(words);
  v.clear_tail();
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::uint64_t BitVector::to_integer() const {
  if (len_ > 64) throw std::invalid_argument("BitVector::to_integer: size > 64");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < len_; ++i) value = (value << 1) | (get(i) ? 1u : 0u);
  return value;
}

std::uint64_t BitVector::raw_block(std::size_t pos, std::size_t count) const {
  assert(count <= 64 && pos + count <= len_);
  if (count == 0) return 0;
  const std::size_t w = pos >> 6;
  const std::size_t off = pos & 63;
  std::uint64_t raw = words_[w] >> off;
  if (off != 0 && off + count > 64) raw |= words_[w + 1] << (64 - off);
  if (count < 64) raw &= (std::uint64_t{1} << count) - 1;
  return raw;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_)
    throw std::invalid_argument("BitVector::operator^=: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

void BitVector::clear_tail() {
  const std::size_t rem = len_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::size_t hamming_distance(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.words().size(); ++i)
    d += static_cast<std::size_t>(std::popcount(x.words()[i] ^ y.words()[i]));
  return d;
}

}  // namespace linrep
