#include "linrep/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "linrep/errors.hpp"

namespace linrep {

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::FixedBudget: return "fixed-budget";
    case Protocol::Ecdf: return "ecdf";
    case Protocol::FixedTarget: return "fixed-target";
  }
  return "?";
}

Protocol protocol_from_string(std::string_view s) {
  if (s == "fixed-budget") return Protocol::FixedBudget;
  if (s == "ecdf") return Protocol::Ecdf;
  if (s == "fixed-target") return Protocol::FixedTarget;
  throw ConfigError("unknown protocol: " + std::string(s));
}

std::uint64_t default_budget(Protocol p) {
  switch (p) {
    case Protocol::FixedBudget: return 300'000;
    case Protocol::Ecdf: return 10'000'000;
    case Protocol::FixedTarget: return 1'000'000;
  }
  return 300'000;
}

std::uint32_t default_runs(Protocol p) {
  return p == Protocol::FixedTarget ? 100 : 20;
}

CampaignPlan CampaignPlan::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("campaign config: expected an object");
  static const char* allowed[] = {"protocol", "instances",       "algorithms", "budget",
                                  "runs",     "representations", "seed",       "workers"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(std::begin(allowed), std::end(allowed),
                     [&](const char* k) { return key == k; }) == std::end(allowed))
      throw ConfigError("campaign config: unknown key '" + key + "'");
  }
  CampaignPlan plan;
  try {
    if (!j.contains("protocol")) throw ConfigError("campaign config: missing 'protocol'");
    plan.protocol = protocol_from_string(j.at("protocol").get<std::string>());
    plan.budget = default_budget(plan.protocol);
    plan.runs = default_runs(plan.protocol);
    if (j.contains("instances"))
      plan.instance_paths = j.at("instances").get<std::vector<std::string>>();
    if (j.contains("algorithms"))
      for (const nlohmann::json& a : j.at("algorithms"))
        plan.algorithms.push_back(AlgorithmConfig::from_json(a));
    if (j.contains("representations"))
      for (const nlohmann::json& r : j.at("representations"))
        plan.representations.push_back(rep_kind_from_string(r.get<std::string>()));
    if (j.contains("budget")) plan.budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("runs")) plan.runs = j.at("runs").get<std::uint32_t>();
    if (j.contains("seed")) plan.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) plan.workers = j.at("workers").get<std::uint32_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("campaign config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("campaign config: ") + e.what());
  }
  return plan;
}

CampaignPlan CampaignPlan::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open campaign config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json CampaignPlan::to_json() const {
  nlohmann::json algos = nlohmann::json::array();
  for (const AlgorithmConfig& a : algorithms) algos.push_back(a.to_json());
  nlohmann::json reps = nlohmann::json::array();
  for (RepKind r : representations) reps.push_back(to_string(r));
  return nlohmann::json{{"protocol", to_string(protocol)},
                        {"instances", instance_paths},
                        {"algorithms", std::move(algos)},
                        {"representations", std::move(reps)},
                        {"budget", budget},
                        {"runs", runs},
                        {"seed", seed},
                        {"workers", workers}};
}

void CampaignPlan::validate() const {
  if (algorithms.empty()) throw ConfigError("campaign config: no algorithms");
  if (representations.empty()) throw ConfigError("campaign config: no representations");
  if (budget < 1) throw ConfigError("campaign config: budget must be at least 1");
  if (runs < 1) throw ConfigError("campaign config: runs must be at least 1");
  if (workers < 1) throw ConfigError("campaign config: workers must be at least 1");
}

std::string CampaignResult::competitor_id(std::uint32_t algorithm_index,
                                          std::uint32_t representation_index) const {
  return plan.algorithms[algorithm_index].id() + "-" +
         to_string(plan.representations[representation_index]);
}

std::string CampaignResult::instance_name(std::uint32_t instance_index) const {
  return instances[instance_index].name;
}

namespace {

std::vector<NamedInstance> load_instances(const CampaignPlan& plan) {
  std::vector<NamedInstance> out;
  for (const std::string& path : plan.instance_paths) {
    const std::string stem = std::filesystem::path(path).stem().string();
    std::vector<SudokuInstance> loaded = load_instance_file(path);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      std::string name = loaded.size() == 1 ? stem : stem + "#" + std::to_string(i);
      out.push_back({std::move(name), std::move(loaded[i])});
    }
  }
  return out;
}

}  // namespace

CampaignResult run_campaign(const CampaignPlan& plan, std::vector<NamedInstance> instances) {
  plan.validate();
  if (instances.empty()) throw ConfigError("campaign config: no instances");
  {
    std::map<std::string, int> seen;
    for (const NamedInstance& inst : instances)
      if (++seen[inst.name] > 1)
        throw ConfigError("campaign config: duplicate instance name '" + inst.name + "'");
  }
  for (const NamedInstance& inst : instances)
    if (inst.instance.num_unknowns() == 0)
      throw ConfigError("campaign config: instance '" + inst.name + "' has no unknowns");

  // Objectives are immutable and shared across the runs that use them.
  const std::size_t reps = plan.representations.size();
  std::vector<std::shared_ptr<const BinarizedObjective>> objectives(reps * instances.size());
  for (std::size_t r = 0; r < reps; ++r)
    for (std::size_t i = 0; i < instances.size(); ++i) {
      auto categorical = std::make_shared<SudokuObjective>(instances[i].instance);
      CategoricalCodec codec(
          Representation::make(plan.representations[r], categorical->num_categories()),
          static_cast<std::uint32_t>(categorical->num_variables()));
      objectives[r * instances.size() + i] =
          std::make_shared<BinarizedObjective>(std::move(categorical), std::move(codec));
    }

  const std::optional<double> stop =
      plan.protocol == Protocol::FixedBudget ? std::nullopt : std::optional<double>(0.0);
  if (plan.protocol == Protocol::FixedTarget)
    for (const auto& objective : objectives)
      if (!objective->known_optimum())
        throw ConfigError("fixed-target campaign requires instances with a known optimum");

  // Validate every configuration up front, before any evaluation happens.
  for (const AlgorithmConfig& cfg : plan.algorithms)
    for (const auto& objective : objectives) cfg.validate(objective->dimension());

  struct Task {
    std::uint32_t a, r, i, run;
  };
  std::vector<Task> tasks;
  tasks.reserve(plan.algorithms.size() * reps * instances.size() * plan.runs);
  for (std::uint32_t a = 0; a < plan.algorithms.size(); ++a)
    for (std::uint32_t r = 0; r < reps; ++r)
      for (std::uint32_t i = 0; i < instances.size(); ++i)
        for (std::uint32_t run = 0; run < plan.runs; ++run) tasks.push_back({a, r, i, run});

  CampaignResult result;
  result.plan = plan;
  result.instances = std::move(instances);
  result.records.resize(tasks.size());

  const auto execute = [&](const Task& t) -> RunRecord {
    const AlgorithmConfig& cfg = plan.algorithms[t.a];
    const BinarizedObjective& objective = *objectives[t.r * result.instances.size() + t.i];
    const std::uint64_t run_seed =
        derive_seed(plan.seed, {fnv1a64(cfg.id()), fnv1a64(to_string(plan.representations[t.r])),
                                fnv1a64(result.instances[t.i].name), t.run});
    RunRecord rec;
    rec.algorithm_index = t.a;
    rec.representation_index = t.r;
    rec.instance_index = t.i;
    rec.run_index = t.run;
    rec.seed = run_seed;
    rec.trace = run(cfg, objective, plan.budget, stop, run_seed);
    rec.best_value = rec.trace.best_value;
    rec.evaluations = rec.trace.evaluations_used;
    rec.success = rec.trace.reached_target;
    rec.runtime = rec.trace.target_evaluation;
    return rec;
  };

  const auto start = std::chrono::steady_clock::now();
  if (plan.workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) result.records[t] = execute(tasks[t]);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(plan.workers)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks.size()); ++t)
      result.records[t] = execute(tasks[t]);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CampaignResult run_campaign(const CampaignPlan& plan) {
  plan.validate();
  if (plan.instance_paths.empty()) throw ConfigError("campaign config: no instances");
  return run_campaign(plan, load_instances(plan));
}

std::vector<RunOutcome> outcomes(const CampaignResult& result) {
  std::vector<RunOutcome> out;
  out.reserve(result.records.size());
  for (const RunRecord& rec : result.records)
    out.push_back({result.competitor_id(rec.algorithm_index, rec.representation_index),
                   result.instance_name(rec.instance_index), rec.best_value, rec.evaluations,
                   rec.success});
  return out;
}

namespace {

// Groups flat outcomes by (competitor, instance), both ordered by first
// appearance.
struct OutcomeGroups {
  std::vector<std::string> competitors;
  std::vector<std::string> instances;
  // values[c][i]: best values; success[c][i]: (successes, runtimes)
  std::vector<std::vector<std::vector<double>>> best_values;
  std::vector<std::vector<std::vector<double>>> runtimes;  // successful runs only
  std::vector<std::vector<std::uint64_t>> successes;
  std::vector<std::vector<std::uint64_t>> total_runs;
};

OutcomeGroups group_outcomes(std::span<const RunOutcome> runs) {
  OutcomeGroups g;
  std::map<std::string, std::size_t> comp_index, inst_index;
  for (const RunOutcome& r : runs) {
    if (!comp_index.contains(r.competitor)) {
      comp_index[r.competitor] = g.competitors.size();
      g.competitors.push_back(r.competitor);
    }
    if (!inst_index.contains(r.instance)) {
      inst_index[r.instance] = g.instances.size();
      g.instances.push_back(r.instance);
    }
  }
  const std::size_t nc = g.competitors.size();
  const std::size_t ni = g.instances.size();
  g.best_values.assign(nc, std::vector<std::vector<double>>(ni));
  g.runtimes.assign(nc, std::vector<std::vector<double>>(ni));
  g.successes.assign(nc, std::vector<std::uint64_t>(ni, 0));
  g.total_runs.assign(nc, std::vector<std::uint64_t>(ni, 0));
  for (const RunOutcome& r : runs) {
    const std::size_t c = comp_index[r.competitor];
    const std::size_t i = inst_index[r.instance];
    g.best_values[c][i].push_back(r.best_value);
    ++g.total_runs[c][i];
    if (r.success) {
      ++g.successes[c][i];
      g.runtimes[c][i].push_back(static_cast<double>(r.evaluations));
    }
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < ni; ++i)
      if (g.total_runs[c][i] == 0)
        throw std::invalid_argument("ranking: competitor '" + g.competitors[c] +
                                    "' has no runs on instance '" + g.instances[i] + "'");
  return g;
}

using StatsKey = std::tuple<double, double, double, double, double>;

StatsKey stats_key(const ValueStats& s) {
  return {s.median, s.q1, s.q3, s.min, s.max};
}

}  // namespace

RankTable rank_fixed_budget(std::span<const RunOutcome> runs) {
  const OutcomeGroups g = group_outcomes(runs);
  const std::size_t nc = g.competitors.size();
  const std::size_t ni = g.instances.size();

  std::vector<std::vector<double>> per_instance_ranks(nc);
  for (std::size_t i = 0; i < ni; ++i) {
    std::vector<ValueStats> stats;
    stats.reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) stats.push_back(summary_stats(g.best_values[c][i]));
    const auto ranks = rank_competitors(stats);
    for (std::size_t c = 0; c < nc; ++c)
      per_instance_ranks[c].push_back(static_cast<double>(ranks[c]));
  }

  RankTable table;
  table.rows.reserve(nc);
  for (std::size_t c = 0; c < nc; ++c)
    table.rows.push_back({g.competitors[c], summary_stats(per_instance_ranks[c]), std::nullopt});
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const RankRow& a, const RankRow& b) {
    return stats_key(a.rank_stats) < stats_key(b.rank_stats);
  });
  return table;
}

RankTable rank_fixed_target(std::span<const RunOutcome> runs) {
  const OutcomeGroups g = group_outcomes(runs);
  const std::size_t nc = g.competitors.size();
  const std::size_t ni = g.instances.size();

  // Better = higher success rate, then smaller runtime stats; competitors
  // that never succeed on an instance sort after all that did.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const StatsKey worst_key = {kInf, kInf, kInf, kInf, kInf};

  std::vector<std::vector<double>> per_instance_ranks(nc);
  for (std::size_t i = 0; i < ni; ++i) {
    std::vector<std::pair<double, StatsKey>> keys(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      const double rate = static_cast<double>(g.successes[c][i]) /
                          static_cast<double>(g.total_runs[c][i]);
      keys[c] = {-rate, g.runtimes[c][i].empty() ? worst_key
                                                 : stats_key(summary_stats(g.runtimes[c][i]))};
    }
    std::vector<std::uint32_t> order(nc);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> ranks(nc);
    for (std::uint32_t pos = 0; pos < nc; ++pos) ranks[order[pos]] = pos + 1;
    for (std::size_t c = 0; c < nc; ++c)
      per_instance_ranks[c].push_back(static_cast<double>(ranks[c]));
  }

  RankTable table;
  table.rows.reserve(nc);
  std::vector<double> overall_rate(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::uint64_t successes = 0, total = 0;
    for (std::size_t i = 0; i < ni; ++i) {
      successes += g.successes[c][i];
      total += g.total_runs[c][i];
    }
    overall_rate[c] = static_cast<double>(successes) / static_cast<double>(total);
    table.rows.push_back(
        {g.competitors[c], summary_stats(per_instance_ranks[c]), overall_rate[c]});
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const RankRow& a, const RankRow& b) {
    return std::make_pair(-*a.success_rate, stats_key(a.rank_stats)) <
           std::make_pair(-*b.success_rate, stats_key(b.rank_stats));
  });
  return table;
}

RankTable ranks(const CampaignResult& result) {
  const auto runs = outcomes(result);
  if (result.plan.protocol == Protocol::FixedTarget) return rank_fixed_target(runs);
  return rank_fixed_budget(runs);
}

std::vector<InstanceEcdf> ecdf_report(const CampaignResult& result) {
  std::vector<InstanceEcdf> report;
  const std::size_t na = result.plan.algorithms.size();
  const std::size_t nr = result.plan.representations.size();
  for (std::uint32_t i = 0; i < result.instances.size(); ++i) {
    InstanceEcdf ie;
    ie.instance = result.instances[i].name;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const RunRecord& rec : result.records) {
      if (rec.instance_index != i) continue;
      lo = std::min(lo, rec.best_value);
      if (!rec.trace.improvements.empty())
        hi = std::max(hi, rec.trace.improvements.front().value);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("ecdf_report: no recorded runs for instance " + ie.instance);
    ie.lo = lo;
    ie.hi = hi;
    ie.targets = make_targets(lo, hi);
    for (std::uint32_t a = 0; a < na; ++a)
      for (std::uint32_t r = 0; r < nr; ++r) {
        std::vector<SearchTrace> traces;
        for (const RunRecord& rec : result.records)
          if (rec.instance_index == i && rec.algorithm_index == a &&
              rec.representation_index == r)
            traces.push_back(rec.trace);
        ie.curves.emplace_back(result.competitor_id(a, r), compute_ecdf(traces, ie.targets));
      }
    report.push_back(std::move(ie));
  }
  return report;
}

}  // namespace linrep
