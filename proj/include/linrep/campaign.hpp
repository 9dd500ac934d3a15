#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "linrep/ecdf.hpp"
#include "linrep/metaheuristics.hpp"
#include "linrep/stats.hpp"

namespace linrep {

inline constexpr const char* kVersion = "0.1.0";

enum class Protocol { FixedBudget, Ecdf, FixedTarget };

const char* to_string(Protocol p);
Protocol protocol_from_string(std::string_view s);
std::uint64_t default_budget(Protocol p);
std::uint32_t default_runs(Protocol p);

// Campaign description: competitors are the cross product of algorithms and
// representations, applied to every instance, `runs` times each.
struct CampaignPlan {
  Protocol protocol = Protocol::FixedBudget;
  std::vector<std::string> instance_paths;
  std::vector<AlgorithmConfig> algorithms;
  std::vector<RepKind> representations;
  std::uint64_t budget = default_budget(Protocol::FixedBudget);
  std::uint32_t runs = default_runs(Protocol::FixedBudget);
  std::uint64_t seed = 1;
  std::uint32_t workers = 1;

  static CampaignPlan from_json(const nlohmann::json& j);
  static CampaignPlan load(const std::string& path);
  nlohmann::json to_json() const;
  void validate() const;  // throws ConfigError
};

struct NamedInstance {
  std::string name;
  SudokuInstance instance;
};

// One run outcome. Records are ordered by (algorithm, representation,
// instance, run) regardless of execution schedule.
struct RunRecord {
  std::uint32_t algorithm_index = 0;
  std::uint32_t representation_index = 0;
  std::uint32_t instance_index = 0;
  std::uint32_t run_index = 0;
  std::uint64_t seed = 0;
  double best_value = 0;
  std::uint64_t evaluations = 0;
  bool success = false;
  std::uint64_t runtime = 0;  // evaluations to the first optimum (successful runs)
  SearchTrace trace;
};

struct CampaignResult {
  CampaignPlan plan;
  std::vector<NamedInstance> instances;
  std::vector<RunRecord> records;
  double wall_seconds = 0;

  std::string competitor_id(std::uint32_t algorithm_index,
                            std::uint32_t representation_index) const;
  std::string instance_name(std::uint32_t instance_index) const;
};

// Executes the whole plan. Runs are independent; with workers > 1 they are
// spread over an OpenMP team, and the result is identical to the serial
// (workers == 1) path. Per-run seeds are derived from (seed, algorithm id,
// representation id, instance name, run index).
CampaignResult run_campaign(const CampaignPlan& plan, std::vector<NamedInstance> instances);
// Same, loading the instances from plan.instance_paths.
CampaignResult run_campaign(const CampaignPlan& plan);

// Flat per-run outcome, the unit both ranking protocols consume. Competitor
// and instance order follow first appearance.
struct RunOutcome {
  std::string competitor;
  std::string instance;
  double best_value = 0;
  std::uint64_t evaluations = 0;
  bool success = false;
};

std::vector<RunOutcome> outcomes(const CampaignResult& result);

struct RankRow {
  std::string competitor;
  ValueStats rank_stats;                    // over per-instance ranks
  std::optional<double> success_rate;       // fixed-target only, in [0,1]
};

struct RankTable {
  std::vector<RankRow> rows;  // ordered best first
};

// Per instance, competitors are ranked by their final-value stats
// (lexicographic on median, q1, q3, min, max); the table aggregates
// each competitor's ranks across instances and orders by them.
RankTable rank_fixed_budget(std::span<const RunOutcome> runs);

// Per instance, competitors are ranked by success rate (descending), then by
// runtime stats over successful runs; the table aggregates by overall
// success rate, then rank stats.
RankTable rank_fixed_target(std::span<const RunOutcome> runs);

RankTable ranks(const CampaignResult& result);

// Observed value range and the 50-target ECDF curves of one instance.
struct InstanceEcdf {
  std::string instance;
  double lo = 0;  // best value ever recorded on the instance
  double hi = 0;  // worst first-evaluation value recorded
  std::vector<double> targets;
  std::vector<std::pair<std::string, EcdfCurve>> curves;  // per competitor
};

std::vector<InstanceEcdf> ecdf_report(const CampaignResult& result);

// ---- file formats -------------------------------------------------------

// runs.csv: algorithm,representation,instance,run,seed,best_value,evaluations,success
void write_runs_csv(std::ostream& out, const CampaignResult& result);
std::vector<RunOutcome> read_runs_csv(std::istream& in);

// ranks.csv: competitor,min,q1,median,q3,max,success_rate
void write_ranks_csv(std::ostream& out, const RankTable& table);

// ecdf.csv: competitor,instance,evaluation,proportion
void write_ecdf_csv(std::ostream& out, std::span<const InstanceEcdf> report);
std::vector<InstanceEcdf> read_ecdf_csv(std::istream& in);

// Whitespace-separated curves, one block per competitor (two blank lines
// apart), ready for gnuplot's `index` selection.
void write_ecdf_dat(std::ostream& out, const InstanceEcdf& instance_report);

nlohmann::json metadata_json(const CampaignResult& result);

// Writes runs.csv, ranks.csv or ecdf.csv (+ one .dat per instance) depending
// on the protocol, and metadata.json, into out_dir. Overwrites in place.
void write_campaign_outputs(const CampaignResult& result, const std::string& out_dir);

// Deterministic number formatting shared by every writer: integers print
// without a decimal point.
std::string format_number(double v);

}  // namespace linrep
