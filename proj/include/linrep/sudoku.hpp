#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linrep/rng.hpp"

namespace linrep {

// 9x9 board; 0 marks an empty cell, digits are 1..9. Cell (r, c) belongs to
// block 3*(r/3) + c/3.
struct SudokuGrid {
  std::array<std::uint8_t, 81> cells{};

  std::uint8_t at(int row, int col) const { return cells[row * 9 + col]; }
  std::uint8_t& at(int row, int col) { return cells[row * 9 + col]; }
  bool complete() const;
  std::string to_line() const;  // 81 chars, '.' for empty

  bool operator==(const SudokuGrid&) const = default;
};

namespace detail {
// Violation count without the completeness check; all cells must be 1..9.
int count_violations(const SudokuGrid& grid);
}

// Total over all rows, columns and blocks of |occurrences of each digit - 1|.
// Zero iff the board is solved. Requires a complete grid.
int violations(const SudokuGrid& grid);

// A puzzle: the given digits plus the ordered (row-major) unknown locations.
struct SudokuInstance {
  SudokuGrid givens;                        // empty exactly at the unknowns
  std::vector<std::uint8_t> unknown_cells;  // flat indices, ascending

  static SudokuInstance from_givens(const SudokuGrid& givens);

  std::size_t num_unknowns() const { return unknown_cells.size(); }

  // Fill the unknowns with digits (1..9, in unknown order) and count
  // violations of the completed board.
  int restricted_eval(std::span<const std::uint8_t> digits) const;

  std::string to_line() const { return givens.to_line(); }
};

// 81 characters of {1..9, '.', '0'} after whitespace removal; '.' and '0'
// mean unknown.
SudokuInstance parse_grid(std::string_view text);

// Valid complete board with row 0 equal to 1..9.
SudokuGrid canonical_board();

// Valid complete board: the canonical pattern under a random digit
// relabeling, row/column permutations within bands/stacks, and band/stack
// permutations. All of those preserve validity.
SudokuGrid generate_complete_board(Rng& rng);

// Erase `count` distinct cells (uniformly chosen) from a valid complete
// board; the erased digits certify solvability. Requires 1 <= count <= 81.
SudokuInstance erase_cells(const SudokuGrid& board, int count, Rng& rng);

// Instance files: one 81-char grid per line; '#' starts a comment line.
std::vector<SudokuInstance> parse_instance_lines(std::string_view text);
std::vector<SudokuInstance> load_instance_file(const std::string& path);

}  // namespace linrep
