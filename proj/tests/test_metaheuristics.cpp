#include <memory>

#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/metaheuristics.hpp"

using namespace linrep;

namespace {

struct ConstantObjective final : PseudoBooleanObjective {
  std::size_t dim;
  double value;
  ConstantObjective(std::size_t d, double v) : dim(d), value(v) {}
  std::size_t dimension() const override { return dim; }
  double evaluate(const BitVector&) const override { return value; }
};

// 0 on the target category, 1 elsewhere: one categorical variable behind a
// codec.
struct NeedleObjective final : CategoricalObjective {
  std::uint32_t target;
  explicit NeedleObjective(std::uint32_t t) : target(t) {}
  std::size_t num_variables() const override { return 1; }
  std::uint32_t num_categories() const override { return 4; }
  double evaluate(std::span<const std::uint16_t> cats) const override {
    return cats[0] == target ? 0.0 : 1.0;
  }
  std::optional<double> known_optimum() const override { return 0.0; }
};

BinarizedObjective needle(std::uint32_t target) {
  return BinarizedObjective(std::make_shared<NeedleObjective>(target),
                            CategoricalCodec(Representation::linear(4), 1));
}

// OneMax-style toy problem, enough structure for every variant to improve.
struct WeightObjective final : PseudoBooleanObjective {
  std::size_t dim;
  explicit WeightObjective(std::size_t d) : dim(d) {}
  std::size_t dimension() const override { return dim; }
  double evaluate(const BitVector& x) const override {
    return static_cast<double>(x.weight());
  }
  std::optional<double> known_optimum() const override { return 0.0; }
};

AlgorithmConfig config_for(Algorithm a) {
  AlgorithmConfig cfg;
  cfg.algorithm = a;
  return cfg;
}

}  // namespace

TEST_CASE("constant objective: the trace is a single first-evaluation entry") {
  const ConstantObjective objective(12, 3.0);
  for (Algorithm a : kAllAlgorithms) {
    const SearchTrace trace = run(config_for(a), objective, 200, std::nullopt, 7);
    INFO("algorithm ", to_string(a));
    REQUIRE(trace.improvements.size() == 1);
    CHECK(trace.improvements[0].evaluation == 1);
    CHECK(trace.improvements[0].value == 3.0);
    CHECK(trace.best_value == 3.0);
    CHECK(trace.evaluations_used == 200);
  }
}

TEST_CASE("trace invariants hold for every variant") {
  const WeightObjective objective(20);
  for (Algorithm a : kAllAlgorithms) {
    const CountingObjective counted(objective);
    const SearchTrace trace = run(config_for(a), counted, 500, std::nullopt, 11);
    INFO("algorithm ", to_string(a));
    CHECK(trace.evaluations_used <= 500);
    CHECK(counted.calls() == trace.evaluations_used);
    REQUIRE_FALSE(trace.improvements.empty());
    CHECK(trace.improvements.front().evaluation == 1);
    for (std::size_t i = 1; i < trace.improvements.size(); ++i) {
      CHECK(trace.improvements[i].evaluation > trace.improvements[i - 1].evaluation);
      CHECK(trace.improvements[i].value < trace.improvements[i - 1].value);
    }
    CHECK(trace.best_value == trace.improvements.back().value);
    CHECK(objective.evaluate(trace.best_point) == trace.best_value);
  }
}

TEST_CASE("identical seeds reproduce identical traces") {
  const WeightObjective objective(30);
  for (Algorithm a : kAllAlgorithms) {
    const SearchTrace t1 = run(config_for(a), objective, 300, std::nullopt, 99);
    const SearchTrace t2 = run(config_for(a), objective, 300, std::nullopt, 99);
    INFO("algorithm ", to_string(a));
    CHECK(t1.best_value == t2.best_value);
    CHECK(t1.evaluations_used == t2.evaluations_used);
    REQUIRE(t1.improvements.size() == t2.improvements.size());
    for (std::size_t i = 0; i < t1.improvements.size(); ++i) {
      CHECK(t1.improvements[i].evaluation == t2.improvements[i].evaluation);
      CHECK(t1.improvements[i].value == t2.improvements[i].value);
    }
    CHECK(t1.best_point == t2.best_point);
  }
}

TEST_CASE("stopping at the optimum halts immediately") {
  const WeightObjective objective(8);
  for (Algorithm a : kAllAlgorithms) {
    const CountingObjective counted(objective);
    const SearchTrace trace = run(config_for(a), counted, 100'000, 0.0, 3);
    INFO("algorithm ", to_string(a));
    REQUIRE(trace.reached_target);
    CHECK(trace.best_value == 0.0);
    CHECK(trace.target_evaluation == trace.evaluations_used);
    CHECK(counted.calls() == trace.evaluations_used);
  }
}

TEST_CASE("needle behind a locally bijective codec") {
  SUBCASE("rls succeeds from every start point for every target") {
    for (std::uint32_t target = 0; target < 4; ++target) {
      const BinarizedObjective objective = needle(target);
      for (std::uint64_t start = 0; start < 8; ++start) {
        AlgorithmConfig cfg = config_for(Algorithm::Rls);
        cfg.initial_point = BitVector::from_integer(start, 3);
        const SearchTrace trace = run(cfg, objective, 100, 0.0, 12345 + start);
        INFO("target ", target, " start ", start);
        CHECK(trace.reached_target);
      }
    }
  }
  SUBCASE("hc finds the needle within one sweep: at most n + 1 evaluations") {
    for (std::uint32_t target = 0; target < 4; ++target) {
      const BinarizedObjective objective = needle(target);
      for (std::uint64_t start = 0; start < 8; ++start) {
        AlgorithmConfig cfg = config_for(Algorithm::Hc);
        cfg.initial_point = BitVector::from_integer(start, 3);
        const SearchTrace trace = run(cfg, objective, 100, 0.0, 777 + start);
        INFO("target ", target, " start ", start);
        REQUIRE(trace.reached_target);
        CHECK(trace.target_evaluation <= 4);
      }
    }
  }
}

TEST_CASE("standard bit mutation") {
  Rng rng(55);
  SUBCASE("ensure_flip always flips at least one bit") {
    for (int trial = 0; trial < 1000; ++trial) {
      BitVector x(40);
      standard_bit_mutation(rng, x, 1.0 / 40, true);
      CHECK(x.weight() >= 1);
    }
  }
  SUBCASE("rate one flips everything") {
    BitVector x(17);
    standard_bit_mutation(rng, x, 1.0, false);
    CHECK(x.weight() == 17);
  }
  SUBCASE("the mean flip count tracks the rate") {
    std::size_t flips = 0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; ++trial) {
      BitVector x(100);
      standard_bit_mutation(rng, x, 0.05, false);
      flips += x.weight();
    }
    const double mean = static_cast<double>(flips) / trials;
    CHECK(mean > 4.0);
    CHECK(mean < 6.0);
  }
}

TEST_CASE("configs serialize, validate, and reject junk") {
  SUBCASE("round trip through json") {
    AlgorithmConfig cfg = config_for(Algorithm::Ga);
    cfg.ga_population = 64;
    cfg.ga_tournament = 3;
    cfg.ga_crossover_rate = 0.5;
    const AlgorithmConfig back = AlgorithmConfig::from_json(cfg.to_json());
    CHECK(back.algorithm == Algorithm::Ga);
    CHECK(back.ga_population == 64);
    CHECK(back.ga_tournament == 3);
    CHECK(back.ga_crossover_rate == 0.5);
  }
  SUBCASE("bare strings are accepted as tags") {
    CHECK(AlgorithmConfig::from_json(nlohmann::json("sa")).algorithm == Algorithm::Sa);
    CHECK_THROWS_AS(AlgorithmConfig::from_json(nlohmann::json("p3")), ConfigError);
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(
        AlgorithmConfig::from_json(nlohmann::json{{"algorithm", "rls"}, {"extra", 1}}),
        ConfigError);
    CHECK_THROWS_AS(AlgorithmConfig::from_json(nlohmann::json{
                        {"algorithm", "rls"}, {"params", {{"population", 5}}}}),
                    ConfigError);
  }
  SUBCASE("invalid parameters fail before any evaluation") {
    const ConstantObjective objective(10, 1.0);
    AlgorithmConfig cfg = config_for(Algorithm::Ga);
    cfg.ga_tournament = 0;
    const CountingObjective counted(objective);
    CHECK_THROWS_AS(run(cfg, counted, 100, std::nullopt, 1), ConfigError);
    CHECK(counted.calls() == 0);

    AlgorithmConfig pbil = config_for(Algorithm::Pbil);
    pbil.pbil_learning_rate = 0.0;
    CHECK_THROWS_AS(run(pbil, objective, 100, std::nullopt, 1), ConfigError);

    AlgorithmConfig rls = config_for(Algorithm::Rls);
    rls.initial_point = BitVector(9);
    CHECK_THROWS_AS(run(rls, objective, 100, std::nullopt, 1), ConfigError);

    CHECK_THROWS_AS(run(config_for(Algorithm::Rls), objective, 0, std::nullopt, 1),
                    ConfigError);
  }
}

TEST_CASE("budget is honored exactly even mid-population") {
  for (Algorithm a : {Algorithm::Ga, Algorithm::Umda, Algorithm::Pbil, Algorithm::EaMu1}) {
    const WeightObjective objective(16);
    const CountingObjective counted(objective);
    const SearchTrace trace = run(config_for(a), counted, 7, std::nullopt, 21);
    INFO("algorithm ", to_string(a));
    CHECK(trace.evaluations_used == 7);
    CHECK(counted.calls() == 7);
  }
}
