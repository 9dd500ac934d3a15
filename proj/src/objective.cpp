#include "linrep/objective.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace linrep {

double SudokuObjective::evaluate(std::span<const std::uint16_t> categories) const {
  if (categories.size() != instance_.num_unknowns())
    throw std::invalid_argument("SudokuObjective: category vector length mismatch");
  SudokuGrid filled = instance_.givens;
  for (std::size_t v = 0; v < categories.size(); ++v)
    filled.cells[instance_.unknown_cells[v]] = static_cast<std::uint8_t>(categories[v] + 1);
  return static_cast<double>(detail::count_violations(filled));
}

BinarizedObjective::BinarizedObjective(std::shared_ptr<const CategoricalObjective> objective,
                                       CategoricalCodec codec)
    : objective_(std::move(objective)), codec_(std::move(codec)) {
  if (!objective_) throw std::invalid_argument("BinarizedObjective: null objective");
  if (codec_.variables() != objective_->num_variables())
    throw std::invalid_argument("BinarizedObjective: codec/objective variable count mismatch");
  if (codec_.representation().categories() != objective_->num_categories())
    throw std::invalid_argument("BinarizedObjective: codec/objective category count mismatch");
}

double BinarizedObjective::evaluate(const BitVector& x) const {
  if (x.size() != codec_.total_bits())
    throw std::invalid_argument("BinarizedObjective: bit string length mismatch");
  const std::uint32_t m = codec_.variables();
  std::array<std::uint16_t, 96> stack_buf;
  std::vector<std::uint16_t> heap_buf;
  std::span<std::uint16_t> cats;
  if (m <= stack_buf.size()) {
    cats = std::span<std::uint16_t>(stack_buf.data(), m);
  } else {
    heap_buf.resize(m);
    cats = heap_buf;
  }
  codec_.decode_into(x, cats);
  return objective_->evaluate(cats);
}

}  // namespace linrep
