#include "linrep/sudoku.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "linrep/errors.hpp"

namespace linrep {

bool SudokuGrid::complete() const {
  for (std::uint8_t d : cells)
    if (d == 0) return false;
  return true;
}

std::string SudokuGrid::to_line() const {
  std::string s(81, '.');
  for (int i = 0; i < 81; ++i)
    if (cells[i] != 0) s[i] = static_cast<char>('0' + cells[i]);
  return s;
}

namespace detail {

int count_violations(const SudokuGrid& grid) {
  int total = 0;
  int counts[10];
  const auto tally_unit = [&](int base, int row_stride, int col_stride) {
    for (int d = 1; d <= 9; ++d) counts[d] = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) ++counts[grid.cells[base + a * row_stride + b * col_stride]];
    for (int d = 1; d <= 9; ++d) total += std::abs(counts[d] - 1);
  };
  for (int r = 0; r < 9; ++r) tally_unit(r * 9, 3, 1);         // row r (3x3 walk over 9 cells)
  for (int c = 0; c < 9; ++c) tally_unit(c, 27, 9);            // column c
  for (int b = 0; b < 9; ++b) tally_unit((b / 3) * 27 + (b % 3) * 3, 9, 1);  // block b
  return total;
}

}  // namespace detail

int violations(const SudokuGrid& grid) {
  if (!grid.complete())
    throw std::invalid_argument("violations: grid has empty cells");
  return detail::count_violations(grid);
}

SudokuInstance SudokuInstance::from_givens(const SudokuGrid& givens) {
  SudokuInstance inst;
  inst.givens = givens;
  for (int i = 0; i < 81; ++i)
    if (givens.cells[i] == 0) inst.unknown_cells.push_back(static_cast<std::uint8_t>(i));
  return inst;
}

int SudokuInstance::restricted_eval(std::span<const std::uint8_t> digits) const {
  if (digits.size() != unknown_cells.size())
    throw std::invalid_argument("restricted_eval: assignment length mismatch");
  SudokuGrid filled = givens;
  for (std::size_t v = 0; v < digits.size(); ++v) {
    if (digits[v] < 1 || digits[v] > 9)
      throw std::invalid_argument("restricted_eval: digit out of range");
    filled.cells[unknown_cells[v]] = digits[v];
  }
  return detail::count_violations(filled);
}

SudokuInstance parse_grid(std::string_view text) {
  SudokuGrid grid;
  int pos = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (pos >= 81)
      throw ParseError("grid has more than 81 symbols");
    if (ch >= '1' && ch <= '9')
      grid.cells[pos] = static_cast<std::uint8_t>(ch - '0');
    else if (ch == '.' || ch == '0')
      grid.cells[pos] = 0;
    else
      throw ParseError("invalid symbol '" + std::string(1, ch) + "' at position " +
                       std::to_string(pos));
    ++pos;
  }
  if (pos != 81)
    throw ParseError("grid has " + std::to_string(pos) + " symbols, expected 81");
  return SudokuInstance::from_givens(grid);
}

SudokuGrid canonical_board() {
  SudokuGrid g;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      g.at(i, j) = static_cast<std::uint8_t>((3 * (i % 3) + i / 3 + j) % 9 + 1);
  return g;
}

namespace {

SudokuGrid permute_rows(const SudokuGrid& g, const std::array<int, 9>& row_of) {
  SudokuGrid out;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) out.at(r, c) = g.at(row_of[r], c);
  return out;
}

SudokuGrid permute_cols(const SudokuGrid& g, const std::array<int, 9>& col_of) {
  SudokuGrid out;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) out.at(r, c) = g.at(r, col_of[c]);
  return out;
}

// Row map from a within-band permutation triple and a band permutation.
std::array<int, 9> band_row_map(const std::array<std::vector<std::uint32_t>, 3>& inner,
                                const std::vector<std::uint32_t>& bands) {
  std::array<int, 9> map{};
  for (int band = 0; band < 3; ++band)
    for (int r = 0; r < 3; ++r)
      map[band * 3 + r] = static_cast<int>(bands[band] * 3 + inner[bands[band]][r]);
  return map;
}

}  // namespace

SudokuGrid generate_complete_board(Rng& rng) {
  SudokuGrid g = canonical_board();

  const auto relabel = rng.permutation(9);
  for (auto& cell : g.cells) cell = static_cast<std::uint8_t>(relabel[cell - 1] + 1);

  std::array<std::vector<std::uint32_t>, 3> row_inner{rng.permutation(3), rng.permutation(3),
                                                      rng.permutation(3)};
  std::array<std::vector<std::uint32_t>, 3> col_inner{rng.permutation(3), rng.permutation(3),
                                                      rng.permutation(3)};
  const auto bands = rng.permutation(3);
  const auto stacks = rng.permutation(3);

  g = permute_rows(g, band_row_map(row_inner, bands));
  g = permute_cols(g, band_row_map(col_inner, stacks));
  return g;
}

SudokuInstance erase_cells(const SudokuGrid& board, int count, Rng& rng) {
  if (count < 1 || count > 81)
    throw std::invalid_argument("erase_cells: count must be in 1..81");
  if (violations(board) != 0)
    throw std::invalid_argument("erase_cells: board is not a valid solution");
  SudokuGrid g = board;
  for (std::uint32_t cell : rng.distinct(81, static_cast<std::uint32_t>(count)))
    g.cells[cell] = 0;
  return SudokuInstance::from_givens(g);
}

std::vector<SudokuInstance> parse_instance_lines(std::string_view text) {
  std::vector<SudokuInstance> instances;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    char first = '\0';
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        first = ch;
        break;
      }
    if (first == '\0' || first == '#') continue;
    try {
      instances.push_back(parse_grid(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return instances;
}

std::vector<SudokuInstance> load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_lines(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace linrep
