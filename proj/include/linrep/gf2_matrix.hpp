#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "linrep/bitvec.hpp"

namespace linrep {

// Matrix over GF(2), stored column-wise. Each column is kept as its big-endian
// bit pattern (row 0 is the most significant bit), which makes matrix-vector
// products plain xor folds. Rows are capped at 32.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::uint32_t rows, std::uint32_t cols);
  static GF2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  bool entry(std::uint32_t row, std::uint32_t col) const {
    return (col_bits_[col] >> (rows_ - 1 - row)) & 1u;
  }
  void set_entry(std::uint32_t row, std::uint32_t col, bool v);

  std::uint32_t column_bits(std::uint32_t col) const { return col_bits_[col]; }
  void set_column_bits(std::uint32_t col, std::uint32_t bits);
  BitVector column(std::uint32_t col) const;

  bool operator==(const GF2Matrix&) const = default;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint32_t> col_bits_;
};

// y = A x over GF(2); requires A.cols() == x.size().
BitVector mat_vec_mul(const GF2Matrix& a, const BitVector& x);

}  // namespace linrep
