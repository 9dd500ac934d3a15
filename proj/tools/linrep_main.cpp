// linrep: binary representations of categorical values, Sudoku-as-
// optimization instances, and campaign runners for comparing bit-string
// metaheuristics across representations.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linrep/campaign.hpp"
#include "linrep/errors.hpp"
#include "linrep/hamming.hpp"
#include "linrep/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct RepOptions {
  std::uint32_t categories = 0;
  std::string kind = "linear";
};

json representation_json(const linrep::Representation& rep) {
  json j{{"kind", rep.id()},
         {"categories", rep.categories()},
         {"k", rep.code_bits()},
         {"n", rep.bits()}};
  if (rep.kind() == linrep::RepKind::Linear) {
    json cols = json::array();
    for (std::uint32_t c = 0; c < rep.bits(); ++c)
      cols.push_back(rep.matrix().column(c).to_string());
    j["columns"] = std::move(cols);
  }
  return j;
}

int cmd_rep_build(const RepOptions& opt) {
  const auto rep =
      linrep::Representation::make(linrep::rep_kind_from_string(opt.kind), opt.categories);
  std::cout << representation_json(rep).dump(2) << '\n';
  return kExitOk;
}

int cmd_rep_verify(const RepOptions& opt) {
  const auto rep =
      linrep::Representation::make(linrep::rep_kind_from_string(opt.kind), opt.categories);
  json j = representation_json(rep);
  j["locally_bijective"] = linrep::is_locally_bijective(rep);
  j["locally_surjective"] = linrep::is_locally_surjective(rep);
  j["representative_counts"] = linrep::representative_counts(rep);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_rep_isotropy(const RepOptions& opt, std::uint32_t radius, std::uint32_t samples,
                     std::uint64_t seed, std::uint64_t budget) {
  const auto rep =
      linrep::Representation::make(linrep::rep_kind_from_string(opt.kind), opt.categories);
  linrep::EnumerationLimits limits;
  limits.max_sphere_points = budget;
  linrep::Rng rng(seed);
  json sample_list = json::array();
  bool balanced = true;
  for (std::uint32_t s = 0; s < samples; ++s) {
    const linrep::BitVector center = rng.bits(rep.bits());
    const auto counts = linrep::isotropy_profile(rep, center, radius, linrep::Exec::Parallel,
                                                 limits);
    const std::uint32_t own = rep.decode(center);
    std::uint64_t other = 0;
    bool seeded = false;
    for (std::uint32_t c = 0; c < rep.categories(); ++c) {
      if (c == own) continue;
      if (!seeded) {
        other = counts[c];
        seeded = true;
      } else if (counts[c] != other) {
        balanced = false;
      }
    }
    sample_list.push_back(json{{"center", center.to_string()},
                               {"own_category", own},
                               {"own_count", counts[own]},
                               {"counts", counts}});
  }
  json j{{"kind", rep.id()},
         {"categories", rep.categories()},
         {"n", rep.bits()},
         {"radius", radius},
         {"sphere_points", linrep::binomial(rep.bits(), radius)},
         {"balanced", balanced},
         {"samples", std::move(sample_list)}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sudoku_gen(std::uint32_t count, int erase, std::uint64_t seed,
                   const std::string& out_path) {
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  json meta{{"seed", seed}, {"erase", erase}, {"instances", json::array()}};
  out << "# generated sudoku instances (erase=" << erase << ", seed=" << seed << ")\n";
  for (std::uint32_t i = 0; i < count; ++i) {
    linrep::Rng rng(linrep::derive_seed(seed, {i}));
    const linrep::SudokuGrid board = linrep::generate_complete_board(rng);
    const linrep::SudokuInstance inst = linrep::erase_cells(board, erase, rng);
    out << inst.to_line() << '\n';
    meta["instances"].push_back(json{{"index", i},
                                     {"instance", inst.to_line()},
                                     {"solution", board.to_line()}});
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + out_path);
  const std::string sidecar = out_path + ".meta.json";
  std::ofstream meta_out(sidecar, std::ios::binary | std::ios::trunc);
  if (!meta_out) throw std::runtime_error("cannot write " + sidecar);
  meta_out << meta.dump(2) << '\n';
  return kExitOk;
}

int cmd_sudoku_eval(const std::string& file, const std::string& grid) {
  std::vector<linrep::SudokuInstance> instances;
  if (!grid.empty()) instances.push_back(linrep::parse_grid(grid));
  if (!file.empty()) {
    auto loaded = linrep::load_instance_file(file);
    instances.insert(instances.end(), loaded.begin(), loaded.end());
  }
  if (instances.empty()) throw linrep::ConfigError("sudoku eval: nothing to evaluate");
  json results = json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!instances[i].givens.complete())
      throw std::invalid_argument("grid " + std::to_string(i) + " has " +
                                  std::to_string(instances[i].num_unknowns()) +
                                  " empty cells; evaluation needs a complete board");
    results.push_back(json{{"index", i}, {"violations", linrep::violations(instances[i].givens)}});
  }
  std::cout << results.dump(2) << '\n';
  return kExitOk;
}

int cmd_campaign_run(const std::string& config_path, const std::string& out_dir,
                     std::optional<std::uint32_t> workers, std::optional<std::uint64_t> seed) {
  linrep::CampaignPlan plan = linrep::CampaignPlan::load(config_path);
  if (workers) plan.workers = *workers;
  if (seed) plan.seed = *seed;
  const linrep::CampaignResult result = linrep::run_campaign(plan);
  linrep::write_campaign_outputs(result, out_dir);
  std::cerr << "wrote " << out_dir << " (" << result.records.size() << " runs, "
            << result.wall_seconds << " s)\n";
  return kExitOk;
}

int cmd_report_ranks(const std::string& runs_path, const std::string& protocol,
                     const std::string& out_path) {
  std::ifstream in(runs_path);
  if (!in) throw std::runtime_error("cannot open " + runs_path);
  const auto runs = linrep::read_runs_csv(in);
  const auto protocol_kind = linrep::protocol_from_string(protocol);
  const linrep::RankTable table = protocol_kind == linrep::Protocol::FixedTarget
                                      ? linrep::rank_fixed_target(runs)
                                      : linrep::rank_fixed_budget(runs);
  if (out_path.empty()) {
    linrep::write_ranks_csv(std::cout, table);
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    linrep::write_ranks_csv(out, table);
  }
  return kExitOk;
}

int cmd_report_ecdf(const std::string& ecdf_path, const std::string& out_dir) {
  std::ifstream in(ecdf_path);
  if (!in) throw std::runtime_error("cannot open " + ecdf_path);
  const auto report = linrep::read_ecdf_csv(in);
  std::filesystem::create_directories(out_dir);
  for (const linrep::InstanceEcdf& ie : report) {
    const auto path = std::filesystem::path(out_dir) / ("ecdf-" + ie.instance + ".dat");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    linrep::write_ecdf_dat(out, ie);
  }
  std::cerr << "wrote " << report.size() << " .dat file(s) to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary representations of categorical values and Sudoku benchmarks"};
  app.set_version_flag("--version", linrep::kVersion);
  app.require_subcommand(1);
  int rc = kExitOk;
  const auto run = [&rc](auto&& fn) {
    return [&rc, fn]() { rc = fn(); };
  };

  RepOptions rep_opt;
  std::uint32_t radius = 0, samples = 10;
  std::uint64_t seed = 1, sphere_budget = 10'000'000;

  auto* rep = app.add_subcommand("rep", "build and verify representations");
  rep->require_subcommand(1);
  const auto add_rep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n-categories", rep_opt.categories, "category count N")
        ->required()
        ->check(CLI::Range(std::uint32_t{2}, std::uint32_t{65535}));
    cmd->add_option("--kind", rep_opt.kind, "linear, direct or unary")
        ->check(CLI::IsMember({"linear", "direct", "unary"}));
  };
  auto* rep_build = rep->add_subcommand("build", "print the representation as JSON");
  add_rep_flags(rep_build);
  rep_build->callback(run([&] { return cmd_rep_build(rep_opt); }));

  auto* rep_verify =
      rep->add_subcommand("verify", "check local bijectivity/surjectivity and redundancy");
  add_rep_flags(rep_verify);
  rep_verify->callback(run([&] { return cmd_rep_verify(rep_opt); }));

  auto* rep_iso = rep->add_subcommand("isotropy", "per-category sphere counts");
  add_rep_flags(rep_iso);
  rep_iso->add_option("--radius", radius, "mutation radius r")->required();
  rep_iso->add_option("--samples", samples, "number of random centers");
  rep_iso->add_option("--seed", seed, "sampling seed");
  rep_iso->add_option("--budget", sphere_budget, "max sphere points");
  rep_iso->callback(
      run([&] { return cmd_rep_isotropy(rep_opt, radius, samples, seed, sphere_budget); }));

  std::uint32_t gen_count = 1;
  int gen_erase = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out, eval_file, eval_grid;

  auto* sudoku = app.add_subcommand("sudoku", "generate and evaluate boards");
  sudoku->require_subcommand(1);
  auto* sudoku_gen =
      sudoku->add_subcommand("gen", "generate instances by erasing digits from valid boards");
  sudoku_gen->add_option("--instances", gen_count, "number of instances")
      ->check(CLI::PositiveNumber);
  sudoku_gen->add_option("--erase", gen_erase, "digits to erase per instance")
      ->required()
      ->check(CLI::Range(1, 81));
  sudoku_gen->add_option("--seed", gen_seed, "generator seed");
  sudoku_gen->add_option("--out", gen_out, "output instance file")->required();
  sudoku_gen->callback(
      run([&] { return cmd_sudoku_gen(gen_count, gen_erase, gen_seed, gen_out); }));

  auto* sudoku_eval = sudoku->add_subcommand("eval", "count violations of complete boards");
  sudoku_eval->add_option("--file", eval_file, "instance file to evaluate");
  sudoku_eval->add_option("--grid", eval_grid, "single 81-char grid");
  sudoku_eval->callback(run([&] { return cmd_sudoku_eval(eval_file, eval_grid); }));

  std::string campaign_config, campaign_out = "campaign-out";
  std::optional<std::uint32_t> campaign_workers;
  std::optional<std::uint64_t> campaign_seed;

  auto* campaign = app.add_subcommand("campaign", "run experiment campaigns");
  campaign->require_subcommand(1);
  auto* campaign_run = campaign->add_subcommand("run", "execute a campaign config");
  campaign_run->add_option("--config", campaign_config, "campaign config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  campaign_run->add_option("--out-dir", campaign_out, "output directory");
  campaign_run->add_option("--workers", campaign_workers, "parallel workers (overrides config)");
  campaign_run->add_option("--seed", campaign_seed, "master seed (overrides config)");
  campaign_run->callback(run([&] {
    return cmd_campaign_run(campaign_config, campaign_out, campaign_workers, campaign_seed);
  }));

  std::string report_runs, report_protocol = "fixed-budget", report_out;
  std::string report_ecdf_path, report_ecdf_out = ".";

  auto* report = app.add_subcommand("report", "re-derive reports from result files");
  report->require_subcommand(1);
  auto* report_ranks = report->add_subcommand("ranks", "rank table from runs.csv");
  report_ranks->add_option("--runs", report_runs, "runs.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  report_ranks->add_option("--protocol", report_protocol, "fixed-budget or fixed-target")
      ->check(CLI::IsMember({"fixed-budget", "fixed-target"}));
  report_ranks->add_option("--out", report_out, "output path (default stdout)");
  report_ranks->callback(
      run([&] { return cmd_report_ranks(report_runs, report_protocol, report_out); }));

  auto* report_ecdf = report->add_subcommand("ecdf", "gnuplot .dat files from ecdf.csv");
  report_ecdf->add_option("--ecdf", report_ecdf_path, "ecdf.csv path")
      ->required()
      ->check(CLI::ExistingFile);
  report_ecdf->add_option("--out-dir", report_ecdf_out, "output directory");
  report_ecdf->callback(
      run([&] { return cmd_report_ecdf(report_ecdf_path, report_ecdf_out); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help/--version are "successful" parse errors with exit code 0.
    return app.exit(e) == 0 ? kExitOk : kExitUsageError;
  } catch (const linrep::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return rc;
}
