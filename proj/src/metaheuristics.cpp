#include "linrep/metaheuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linrep/errors.hpp"

namespace linrep {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Rls: return "rls";
    case Algorithm::Hc: return "hc";
    case Algorithm::Sa: return "sa";
    case Algorithm::Ea1p1: return "ea-1p1";
    case Algorithm::EaMu1: return "ea-10p1";
    case Algorithm::Ga: return "ga";
    case Algorithm::Pbil: return "pbil";
    case Algorithm::Umda: return "umda";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view s) {
  for (Algorithm a : kAllAlgorithms)
    if (s == to_string(a)) return a;
  throw ConfigError("unknown algorithm: " + std::string(s));
}

void AlgorithmConfig::validate(std::size_t dimension) const {
  const auto fail = [](const std::string& msg) { throw ConfigError("algorithm config: " + msg); };
  if (dimension < 1) fail("objective dimension must be at least 1");
  switch (algorithm) {
    case Algorithm::Rls:
      if (!(patience_factor > 0)) fail("patience_factor must be positive");
      break;
    case Algorithm::Hc:
      break;
    case Algorithm::Sa:
      if (!(sa_initial_acceptance > 0 && sa_initial_acceptance < 1))
        fail("initial_acceptance must be in (0,1)");
      if (!(sa_cooling > 0 && sa_cooling < 1)) fail("cooling must be in (0,1)");
      break;
    case Algorithm::Ea1p1:
      break;
    case Algorithm::EaMu1:
      if (mu < 1) fail("mu must be at least 1");
      break;
    case Algorithm::Ga:
      if (ga_population < 2) fail("population must be at least 2");
      if (ga_tournament < 1 || ga_tournament > ga_population)
        fail("tournament size must be in 1..population");
      if (!(ga_crossover_rate >= 0 && ga_crossover_rate <= 1))
        fail("crossover_rate must be in [0,1]");
      break;
    case Algorithm::Pbil:
      if (pbil_population < 1) fail("population must be at least 1");
      if (!(pbil_learning_rate > 0 && pbil_learning_rate <= 1))
        fail("learning_rate must be in (0,1]");
      break;
    case Algorithm::Umda:
      if (umda_population < 1) fail("population must be at least 1");
      if (umda_selection < 1 || umda_selection > umda_population)
        fail("selection must be in 1..population");
      break;
  }
  if (initial_point && initial_point->size() != dimension)
    fail("initial point length does not match the objective dimension");
}

namespace {

template <typename T>
T get_field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("algorithm config: bad value for '") + key + "'");
  }
}

}  // namespace

AlgorithmConfig AlgorithmConfig::from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    AlgorithmConfig cfg;
    cfg.algorithm = algorithm_from_string(j.get<std::string>());
    return cfg;
  }
  if (!j.is_object()) throw ConfigError("algorithm config: expected a string or an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "algorithm" && key != "params")
      throw ConfigError("algorithm config: unknown key '" + key + "'");
  }
  if (!j.contains("algorithm")) throw ConfigError("algorithm config: missing 'algorithm'");
  AlgorithmConfig cfg;
  cfg.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
  if (!j.contains("params")) return cfg;
  const nlohmann::json& p = j.at("params");
  if (!p.is_object()) throw ConfigError("algorithm config: 'params' must be an object");

  std::vector<std::string> allowed;
  switch (cfg.algorithm) {
    case Algorithm::Rls: allowed = {"patience_factor", "accept_equal"}; break;
    case Algorithm::Hc: allowed = {}; break;
    case Algorithm::Sa: allowed = {"initial_acceptance", "cooling", "probes"}; break;
    case Algorithm::Ea1p1: allowed = {"accept_equal"}; break;
    case Algorithm::EaMu1: allowed = {"mu", "accept_equal"}; break;
    case Algorithm::Ga: allowed = {"population", "tournament", "crossover_rate"}; break;
    case Algorithm::Pbil: allowed = {"population", "learning_rate"}; break;
    case Algorithm::Umda: allowed = {"population", "selection"}; break;
  }
  for (const auto& [key, value] : p.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("algorithm config: unknown parameter '" + key + "' for " +
                        to_string(cfg.algorithm));
  }

  cfg.patience_factor = get_field(p, "patience_factor", cfg.patience_factor);
  cfg.accept_equal = get_field(p, "accept_equal", cfg.accept_equal);
  cfg.sa_initial_acceptance = get_field(p, "initial_acceptance", cfg.sa_initial_acceptance);
  cfg.sa_cooling = get_field(p, "cooling", cfg.sa_cooling);
  cfg.sa_probes = get_field(p, "probes", cfg.sa_probes);
  cfg.mu = get_field(p, "mu", cfg.mu);
  switch (cfg.algorithm) {
    case Algorithm::Ga:
      cfg.ga_population = get_field(p, "population", cfg.ga_population);
      cfg.ga_tournament = get_field(p, "tournament", cfg.ga_tournament);
      cfg.ga_crossover_rate = get_field(p, "crossover_rate", cfg.ga_crossover_rate);
      break;
    case Algorithm::Pbil:
      cfg.pbil_population = get_field(p, "population", cfg.pbil_population);
      cfg.pbil_learning_rate = get_field(p, "learning_rate", cfg.pbil_learning_rate);
      break;
    case Algorithm::Umda:
      cfg.umda_population = get_field(p, "population", cfg.umda_population);
      cfg.umda_selection = get_field(p, "selection", cfg.umda_selection);
      break;
    default:
      break;
  }
  return cfg;
}

nlohmann::json AlgorithmConfig::to_json() const {
  nlohmann::json p = nlohmann::json::object();
  switch (algorithm) {
    case Algorithm::Rls:
      p["patience_factor"] = patience_factor;
      p["accept_equal"] = accept_equal;
      break;
    case Algorithm::Hc:
      break;
    case Algorithm::Sa:
      p["initial_acceptance"] = sa_initial_acceptance;
      p["cooling"] = sa_cooling;
      p["probes"] = sa_probes;
      break;
    case Algorithm::Ea1p1:
      p["accept_equal"] = accept_equal;
      break;
    case Algorithm::EaMu1:
      p["mu"] = mu;
      p["accept_equal"] = accept_equal;
      break;
    case Algorithm::Ga:
      p["population"] = ga_population;
      p["tournament"] = ga_tournament;
      p["crossover_rate"] = ga_crossover_rate;
      break;
    case Algorithm::Pbil:
      p["population"] = pbil_population;
      p["learning_rate"] = pbil_learning_rate;
      break;
    case Algorithm::Umda:
      p["population"] = umda_population;
      p["selection"] = umda_selection;
      break;
  }
  return nlohmann::json{{"algorithm", to_string(algorithm)}, {"params", std::move(p)}};
}

void standard_bit_mutation(Rng& rng, BitVector& x, double rate, bool ensure_flip) {
  const std::size_t n = x.size();
  if (rate >= 1.0) {
    for (std::size_t i = 0; i < n; ++i) x.flip(i);
    return;
  }
  const double log_keep = std::log1p(-rate);
  for (;;) {
    std::size_t flips = 0;
    std::size_t pos = 0;
    for (;;) {
      const double u = rng.uniform01();
      pos += static_cast<std::size_t>(std::log1p(-u) / log_keep);
      if (pos >= n) break;
      x.flip(pos);
      ++flips;
      ++pos;
    }
    if (flips > 0 || !ensure_flip) return;
  }
}

namespace {

struct RunState {
  const PseudoBooleanObjective& f;
  std::uint64_t budget;
  std::optional<double> target;
  Rng rng;
  SearchTrace trace;
  bool hit_target = false;

  RunState(const PseudoBooleanObjective& f_, std::uint64_t budget_,
           std::optional<double> target_, std::uint64_t seed)
      : f(f_), budget(budget_), target(target_), rng(seed) {}

  bool done() const { return hit_target || trace.evaluations_used >= budget; }

  double evaluate(const BitVector& x) {
    const double v = f.evaluate(x);
    ++trace.evaluations_used;
    if (v < trace.best_value) {
      trace.best_value = v;
      trace.best_point = x;
      trace.improvements.push_back({trace.evaluations_used, v});
    }
    if (target && v <= *target && !hit_target) {
      hit_target = true;
      trace.reached_target = true;
      trace.target_evaluation = trace.evaluations_used;
    }
    return v;
  }

  BitVector initial_point(const AlgorithmConfig& cfg) {
    if (cfg.initial_point) return *cfg.initial_point;
    return rng.bits(f.dimension());
  }
};

void run_rls(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const std::uint64_t patience =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cfg.patience_factor * n));
  BitVector x = st.initial_point(cfg);
  double value = st.evaluate(x);
  std::uint64_t stale = 0;
  while (!st.done()) {
    const std::size_t i = st.rng.below(n);
    x.flip(i);
    const double v = st.evaluate(x);
    const bool accept = cfg.accept_equal ? v <= value : v < value;
    const bool improved = v < value;
    if (accept)
      value = v;
    else
      x.flip(i);
    stale = improved ? 0 : stale + 1;
    if (stale >= patience && !st.done()) {
      x = st.rng.bits(n);
      value = st.evaluate(x);
      stale = 0;
    }
  }
}

void run_hc(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  BitVector x = st.initial_point(cfg);
  double value = st.evaluate(x);
  while (!st.done()) {
    // One sweep: scan all bits in a fresh random order, taking every strict
    // improvement as soon as it is seen.
    const auto order = st.rng.permutation(static_cast<std::uint32_t>(n));
    bool improved_in_sweep = false;
    for (std::uint32_t i : order) {
      if (st.done()) break;
      x.flip(i);
      const double v = st.evaluate(x);
      if (v < value) {
        value = v;
        improved_in_sweep = true;
      } else {
        x.flip(i);
      }
    }
    if (!improved_in_sweep && !st.done()) {
      x = st.rng.bits(n);
      value = st.evaluate(x);
    }
  }
}

void run_sa(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  BitVector x = st.initial_point(cfg);
  double value = st.evaluate(x);

  // Estimate the scale of worsening moves with single-flip probes from the
  // start point (never accepted), then pick T0 so that a mean worsening move
  // is accepted with the configured probability.
  double delta_sum = 0;
  std::uint64_t delta_count = 0;
  for (std::uint32_t p = 0; p < cfg.sa_probes && !st.done(); ++p) {
    const std::size_t i = st.rng.below(n);
    x.flip(i);
    const double v = st.evaluate(x);
    x.flip(i);
    if (v > value) {
      delta_sum += v - value;
      ++delta_count;
    }
  }
  const double mean_delta = delta_count > 0 ? delta_sum / delta_count : 1.0;
  double temperature = mean_delta / -std::log(cfg.sa_initial_acceptance);

  std::uint64_t proposals = 0;
  while (!st.done()) {
    const std::size_t i = st.rng.below(n);
    x.flip(i);
    const double v = st.evaluate(x);
    const double delta = v - value;
    bool accept = delta <= 0;
    if (!accept) accept = st.rng.uniform01() < std::exp(-delta / temperature);
    if (accept)
      value = v;
    else
      x.flip(i);
    if (++proposals % n == 0) temperature *= cfg.sa_cooling;
  }
}

void run_ea_1p1(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const double rate = 1.0 / static_cast<double>(n);
  BitVector x = st.initial_point(cfg);
  double value = st.evaluate(x);
  BitVector y = x;
  while (!st.done()) {
    y = x;
    standard_bit_mutation(st.rng, y, rate, /*ensure_flip=*/true);
    const double v = st.evaluate(y);
    const bool accept = cfg.accept_equal ? v <= value : v < value;
    if (accept) {
      x = y;
      value = v;
    }
  }
}

void run_ea_mu1(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const double rate = 1.0 / static_cast<double>(n);
  struct Member {
    BitVector genome;
    double value;
  };
  std::vector<Member> pop;
  pop.reserve(cfg.mu);
  for (std::uint32_t i = 0; i < cfg.mu && !st.done(); ++i) {
    BitVector g = (i == 0) ? st.initial_point(cfg) : st.rng.bits(n);
    const double v = st.evaluate(g);
    pop.push_back({std::move(g), v});
  }
  while (!st.done()) {
    const std::size_t parent = st.rng.below(pop.size());
    BitVector child = pop[parent].genome;
    standard_bit_mutation(st.rng, child, rate, /*ensure_flip=*/true);
    const double v = st.evaluate(child);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
      if (pop[i].value > pop[worst].value) worst = i;
    const bool accept = cfg.accept_equal ? v <= pop[worst].value : v < pop[worst].value;
    if (accept) pop[worst] = {std::move(child), v};
  }
}

void run_ga(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const double rate = 1.0 / static_cast<double>(n);
  struct Member {
    BitVector genome;
    double value;
  };
  std::vector<Member> pop;
  pop.reserve(cfg.ga_population);
  for (std::uint32_t i = 0; i < cfg.ga_population && !st.done(); ++i) {
    BitVector g = (i == 0) ? st.initial_point(cfg) : st.rng.bits(n);
    const double v = st.evaluate(g);
    pop.push_back({std::move(g), v});
  }
  const auto tournament = [&]() -> const Member& {
    std::size_t best = st.rng.below(pop.size());
    for (std::uint32_t t = 1; t < cfg.ga_tournament; ++t) {
      const std::size_t c = st.rng.below(pop.size());
      if (pop[c].value < pop[best].value) best = c;
    }
    return pop[best];
  };
  while (!st.done()) {
    std::size_t elite = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
      if (pop[i].value < pop[elite].value) elite = i;
    std::vector<Member> next;
    next.reserve(cfg.ga_population);
    next.push_back(pop[elite]);  // elitism 1, value carried over, not re-evaluated
    while (next.size() < cfg.ga_population && !st.done()) {
      const Member& p1 = tournament();
      const Member& p2 = tournament();
      BitVector child(n);
      if (st.rng.bernoulli(cfg.ga_crossover_rate)) {
        for (std::size_t i = 0; i < n; ++i)
          child.set(i, (st.rng.next() & 1) ? p1.genome.get(i) : p2.genome.get(i));
      } else {
        child = p1.genome;
      }
      standard_bit_mutation(st.rng, child, rate, /*ensure_flip=*/false);
      const double v = st.evaluate(child);
      next.push_back({std::move(child), v});
    }
    pop = std::move(next);
  }
}

BitVector sample_from_model(Rng& rng, const std::vector<double>& p) {
  BitVector x(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (rng.bernoulli(p[i])) x.set(i, true);
  return x;
}

void clamp_model(std::vector<double>& p, double lo, double hi) {
  for (double& v : p) v = std::min(hi, std::max(lo, v));
}

void run_pbil(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const double lo = 1.0 / static_cast<double>(n);
  std::vector<double> model(n, 0.5);
  while (!st.done()) {
    BitVector best;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::uint32_t s = 0; s < cfg.pbil_population && !st.done(); ++s) {
      BitVector x = sample_from_model(st.rng, model);
      const double v = st.evaluate(x);
      if (v < best_value) {
        best_value = v;
        best = std::move(x);
      }
    }
    if (best.empty()) break;
    const double rho = cfg.pbil_learning_rate;
    for (std::size_t i = 0; i < n; ++i)
      model[i] = (1 - rho) * model[i] + rho * (best.get(i) ? 1.0 : 0.0);
    clamp_model(model, lo, 1.0 - lo);
  }
}

void run_umda(RunState& st, const AlgorithmConfig& cfg) {
  const std::size_t n = st.f.dimension();
  const double lo = 1.0 / static_cast<double>(n);
  std::vector<double> model(n, 0.5);
  struct Sample {
    BitVector genome;
    double value;
  };
  while (!st.done()) {
    std::vector<Sample> samples;
    samples.reserve(cfg.umda_population);
    for (std::uint32_t s = 0; s < cfg.umda_population && !st.done(); ++s) {
      BitVector x = sample_from_model(st.rng, model);
      const double v = st.evaluate(x);
      samples.push_back({std::move(x), v});
    }
    if (samples.empty()) break;
    const std::size_t selected = std::min<std::size_t>(cfg.umda_selection, samples.size());
    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& a, const Sample& b) { return a.value < b.value; });
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t ones = 0;
      for (std::size_t s = 0; s < selected; ++s)
        if (samples[s].genome.get(i)) ++ones;
      model[i] = static_cast<double>(ones) / static_cast<double>(selected);
    }
    clamp_model(model, lo, 1.0 - lo);
  }
}

}  // namespace

SearchTrace run(const AlgorithmConfig& config, const PseudoBooleanObjective& objective,
                std::uint64_t budget, std::optional<double> stop_at_optimum,
                std::uint64_t seed) {
  if (budget < 1) throw ConfigError("run: budget must be at least 1");
  config.validate(objective.dimension());

  RunState st(objective, budget, stop_at_optimum, seed);
  switch (config.algorithm) {
    case Algorithm::Rls: run_rls(st, config); break;
    case Algorithm::Hc: run_hc(st, config); break;
    case Algorithm::Sa: run_sa(st, config); break;
    case Algorithm::Ea1p1: run_ea_1p1(st, config); break;
    case Algorithm::EaMu1: run_ea_mu1(st, config); break;
    case Algorithm::Ga: run_ga(st, config); break;
    case Algorithm::Pbil: run_pbil(st, config); break;
    case Algorithm::Umda: run_umda(st, config); break;
  }
  return std::move(st.trace);
}

}  // namespace linrep
