#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "linrep/objective.hpp"
#include "linrep/rng.hpp"

namespace linrep {

enum class Algorithm { Rls, Hc, Sa, Ea1p1, EaMu1, Ga, Pbil, Umda };

inline constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::Rls, Algorithm::Hc,   Algorithm::Sa, Algorithm::Ea1p1,
    Algorithm::EaMu1, Algorithm::Ga, Algorithm::Pbil, Algorithm::Umda};

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

// Parameters for one algorithm variant. Every field is overridable through
// the JSON form {"algorithm": tag, "params": {...}}; unknown keys and
// out-of-range values are rejected before any evaluation.
struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::Rls;

  // rls: restart after patience_factor * n evaluations without improvement
  double patience_factor = 10.0;
  // rls + ea variants: accept offspring with equal value
  bool accept_equal = true;
  // sa: initial acceptance probability of a mean worsening move
  double sa_initial_acceptance = 0.8;
  // sa: temperature factor applied every n proposals
  double sa_cooling = 0.99;
  // sa: pre-run probes used to estimate the worsening-move scale
  // (the probes count toward the budget)
  std::uint32_t sa_probes = 100;
  // ea-10p1: parent population size
  std::uint32_t mu = 10;
  // ga
  std::uint32_t ga_population = 100;
  std::uint32_t ga_tournament = 2;
  double ga_crossover_rate = 0.8;
  // pbil
  std::uint32_t pbil_population = 50;
  double pbil_learning_rate = 0.1;
  // umda
  std::uint32_t umda_population = 100;
  std::uint32_t umda_selection = 50;

  // Pins the first search point instead of sampling it (exhaustive-start
  // tests and small studies). Not part of the JSON schema.
  std::optional<BitVector> initial_point;

  std::string id() const { return to_string(algorithm); }

  // Throws ConfigError on any invalid parameter.
  void validate(std::size_t dimension) const;

  static AlgorithmConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Improvement log of one run. Values strictly decrease along the list and
// evaluation indices (1-based) strictly increase; the first evaluation is
// always recorded.
struct SearchTrace {
  struct Improvement {
    std::uint64_t evaluation;
    double value;
  };

  std::vector<Improvement> improvements;
  BitVector best_point;
  double best_value = std::numeric_limits<double>::infinity();
  std::uint64_t evaluations_used = 0;
  bool reached_target = false;
  std::uint64_t target_evaluation = 0;  // evaluation index of the first hit
};

// Runs one algorithm on a pseudo-boolean objective. Consumes at most
// `budget` evaluations; halts at the first evaluation <= stop_at_optimum
// when that is set. Deterministic given (config, objective, budget, seed).
SearchTrace run(const AlgorithmConfig& config, const PseudoBooleanObjective& objective,
                std::uint64_t budget, std::optional<double> stop_at_optimum,
                std::uint64_t seed);

// Flip each bit independently with the given rate (via geometric skips);
// with ensure_flip, mutations that would flip nothing are re-sampled.
void standard_bit_mutation(Rng& rng, BitVector& x, double rate, bool ensure_flip);

}  // namespace linrep
