#include "linrep/gf2_matrix.hpp"

#include <stdexcept>

namespace linrep {

GF2Matrix::GF2Matrix(std::uint32_t rows, std::uint32_t cols)
    : rows_(rows), cols_(cols), col_bits_(cols, 0) {
  if (rows == 0 || rows > 32) throw std::invalid_argument("GF2Matrix: rows must be in 1..32");
}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const auto nrows = static_cast<std::uint32_t>(rows.size());
  if (nrows == 0) throw std::invalid_argument("GF2Matrix::from_rows: no rows");
  const auto ncols = static_cast<std::uint32_t>(rows.begin()->size());
  GF2Matrix m(nrows, ncols);
  std::uint32_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("GF2Matrix::from_rows: ragged rows");
    std::uint32_t c = 0;
    for (int v : row) m.set_entry(r, c++, v != 0);
    ++r;
  }
  return m;
}

void GF2Matrix::set_entry(std::uint32_t row, std::uint32_t col, bool v) {
  const std::uint32_t mask = 1u << (rows_ - 1 - row);
  if (v)
    col_bits_[col] |= mask;
  else
    col_bits_[col] &= ~mask;
}

void GF2Matrix::set_column_bits(std::uint32_t col, std::uint32_t bits) {
  if (rows_ < 32 && (bits >> rows_) != 0)
    throw std::invalid_argument("GF2Matrix::set_column_bits: pattern does not fit");
  col_bits_[col] = bits;
}

BitVector GF2Matrix::column(std::uint32_t col) const {
  return BitVector::from_integer(col_bits_[col], rows_);
}

BitVector mat_vec_mul(const GF2Matrix& a, const BitVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
  std::uint32_t y = 0;
  x.for_each_set_bit([&](std::size_t i) { y ^= a.column_bits(static_cast<std::uint32_t>(i)); });
  return BitVector::from_integer(y, a.rows());
}

}  // namespace linrep
