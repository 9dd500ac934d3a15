#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "linrep/representation.hpp"
#include "linrep/sudoku.hpp"

namespace linrep {

// Objective over vectors of m categories, each in [0, N). Minimized.
// evaluate() must be pure and safe to call from several threads at once.
class CategoricalObjective {
 public:
  virtual ~CategoricalObjective() = default;
  virtual std::size_t num_variables() const = 0;
  virtual std::uint32_t num_categories() const = 0;
  virtual double evaluate(std::span<const std::uint16_t> categories) const = 0;
  virtual std::optional<double> known_optimum() const { return std::nullopt; }
};

// Violation count of a puzzle board completed with the candidate digits
// (category c stands for digit c + 1). Optimum 0 for solvable instances.
class SudokuObjective final : public CategoricalObjective {
 public:
  explicit SudokuObjective(SudokuInstance instance) : instance_(std::move(instance)) {}

  std::size_t num_variables() const override { return instance_.num_unknowns(); }
  std::uint32_t num_categories() const override { return 9; }
  double evaluate(std::span<const std::uint16_t> categories) const override;
  std::optional<double> known_optimum() const override { return 0.0; }

  const SudokuInstance& instance() const { return instance_; }

 private:
  SudokuInstance instance_;
};

// Pseudo-boolean function over {0,1}^dimension. Minimized; pure and
// shareable across threads.
class PseudoBooleanObjective {
 public:
  virtual ~PseudoBooleanObjective() = default;
  virtual std::size_t dimension() const = 0;
  virtual double evaluate(const BitVector& x) const = 0;
  virtual std::optional<double> known_optimum() const { return std::nullopt; }
};

// Composition of a block codec with a categorical objective: decode every
// variable, evaluate. One call is exactly one evaluation of the inner
// objective; callers do their own evaluation accounting.
class BinarizedObjective final : public PseudoBooleanObjective {
 public:
  BinarizedObjective(std::shared_ptr<const CategoricalObjective> objective,
                     CategoricalCodec codec);

  std::size_t dimension() const override { return codec_.total_bits(); }
  double evaluate(const BitVector& x) const override;
  std::optional<double> known_optimum() const override { return objective_->known_optimum(); }

  const CategoricalCodec& codec() const { return codec_; }
  const CategoricalObjective& categorical() const { return *objective_; }

 private:
  std::shared_ptr<const CategoricalObjective> objective_;
  CategoricalCodec codec_;
};

// Audit wrapper: counts evaluate() calls. Used by tests to check that
// reported evaluation counts match actual objective calls.
class CountingObjective final : public PseudoBooleanObjective {
 public:
  explicit CountingObjective(const PseudoBooleanObjective& inner) : inner_(&inner) {}

  std::size_t dimension() const override { return inner_->dimension(); }
  double evaluate(const BitVector& x) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->evaluate(x);
  }
  std::optional<double> known_optimum() const override { return inner_->known_optimum(); }

  std::uint64_t calls() const { return calls_.load(); }

 private:
  const PseudoBooleanObjective* inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace linrep
