#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linrep/campaign.hpp"
#include "linrep/errors.hpp"

namespace linrep {

std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.007199254740992e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_runs_csv(std::ostream& out, const CampaignResult& result) {
  out << "algorithm,representation,instance,run,seed,best_value,evaluations,success\n";
  for (const RunRecord& rec : result.records) {
    out << result.plan.algorithms[rec.algorithm_index].id() << ','
        << to_string(result.plan.representations[rec.representation_index]) << ','
        << result.instance_name(rec.instance_index) << ',' << rec.run_index << ',' << rec.seed
        << ',' << format_number(rec.best_value) << ',' << rec.evaluations << ','
        << (rec.success ? 1 : 0) << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::vector<RunOutcome> read_runs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("runs csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "algorithm,representation,instance,run,seed,best_value,evaluations,success")
    throw ParseError("runs csv: unexpected header");
  std::vector<RunOutcome> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8)
      throw ParseError("runs csv line " + std::to_string(line_no) + ": expected 8 fields");
    try {
      RunOutcome r;
      r.competitor = fields[0] + "-" + fields[1];
      r.instance = fields[2];
      r.best_value = std::stod(fields[5]);
      r.evaluations = std::stoull(fields[6]);
      r.success = std::stoi(fields[7]) != 0;
      out.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ParseError("runs csv line " + std::to_string(line_no) + ": bad field value");
    }
  }
  return out;
}

void write_ranks_csv(std::ostream& out, const RankTable& table) {
  out << "competitor,min,q1,median,q3,max,success_rate\n";
  for (const RankRow& row : table.rows) {
    out << row.competitor << ',' << format_number(row.rank_stats.min) << ','
        << format_number(row.rank_stats.q1) << ',' << format_number(row.rank_stats.median)
        << ',' << format_number(row.rank_stats.q3) << ',' << format_number(row.rank_stats.max)
        << ',';
    if (row.success_rate) out << format_number(*row.success_rate);
    out << '\n';
  }
}

void write_ecdf_csv(std::ostream& out, std::span<const InstanceEcdf> report) {
  out << "competitor,instance,evaluation,proportion\n";
  for (const InstanceEcdf& ie : report)
    for (const auto& [competitor, curve] : ie.curves)
      for (const auto& point : curve.points)
        out << competitor << ',' << ie.instance << ',' << point.evaluation << ','
            << format_number(point.proportion) << '\n';
}

std::vector<InstanceEcdf> read_ecdf_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("ecdf csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "competitor,instance,evaluation,proportion")
    throw ParseError("ecdf csv: unexpected header");
  std::vector<InstanceEcdf> report;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 4)
      throw ParseError("ecdf csv line " + std::to_string(line_no) + ": expected 4 fields");
    try {
      InstanceEcdf* ie = nullptr;
      for (InstanceEcdf& cand : report)
        if (cand.instance == fields[1]) ie = &cand;
      if (ie == nullptr) {
        report.push_back(InstanceEcdf{});
        ie = &report.back();
        ie->instance = fields[1];
      }
      EcdfCurve* curve = nullptr;
      for (auto& [competitor, c] : ie->curves)
        if (competitor == fields[0]) curve = &c;
      if (curve == nullptr) {
        ie->curves.emplace_back(fields[0], EcdfCurve{});
        curve = &ie->curves.back().second;
      }
      curve->points.push_back({std::stoull(fields[2]), std::stod(fields[3])});
    } catch (const std::exception&) {
      throw ParseError("ecdf csv line " + std::to_string(line_no) + ": bad field value");
    }
  }
  return report;
}

void write_ecdf_dat(std::ostream& out, const InstanceEcdf& instance_report) {
  out << "# instance " << instance_report.instance << "\n";
  out << "# value range [" << format_number(instance_report.lo) << ", "
      << format_number(instance_report.hi) << "]\n";
  bool first = true;
  for (const auto& [competitor, curve] : instance_report.curves) {
    if (!first) out << "\n\n";
    first = false;
    out << "# competitor " << competitor << "\n";
    for (const auto& point : curve.points)
      out << point.evaluation << ' ' << format_number(point.proportion) << '\n';
  }
}

nlohmann::json metadata_json(const CampaignResult& result) {
  nlohmann::json instances = nlohmann::json::array();
  for (const NamedInstance& inst : result.instances) {
    instances.push_back(nlohmann::json{{"name", inst.name},
                                       {"unknowns", inst.instance.num_unknowns()},
                                       {"grid", inst.instance.to_line()}});
  }
  nlohmann::json meta{
      {"tool", {{"name", "linrep"}, {"version", kVersion}}},
      {"config", result.plan.to_json()},
      {"instances", std::move(instances)},
      {"wall_seconds", result.wall_seconds},
      {"quantile_method", "linear interpolation at position (count-1)*p"},
      {"rank_ties", "stable input order"},
  };
  if (result.plan.protocol == Protocol::Ecdf) {
    meta["ecdf_target_range"] =
        "observed per instance: [best value ever recorded, worst first-evaluation value]";
    nlohmann::json ranges = nlohmann::json::object();
    for (const InstanceEcdf& ie : ecdf_report(result))
      ranges[ie.instance] = nlohmann::json::array({ie.lo, ie.hi});
    meta["value_ranges"] = std::move(ranges);
  }
  if (result.plan.protocol != Protocol::FixedBudget)
    meta["stop_at_optimum"] = true;
  return meta;
}

void write_campaign_outputs(const CampaignResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto open = [&](const std::string& name) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (fs::path(out_dir) / name).string());
    return out;
  };
  {
    auto out = open("runs.csv");
    write_runs_csv(out, result);
  }
  if (result.plan.protocol == Protocol::Ecdf) {
    const auto report = ecdf_report(result);
    {
      auto out = open("ecdf.csv");
      write_ecdf_csv(out, report);
    }
    for (const InstanceEcdf& ie : report) {
      auto out = open("ecdf-" + ie.instance + ".dat");
      write_ecdf_dat(out, ie);
    }
  } else {
    auto out = open("ranks.csv");
    write_ranks_csv(out, ranks(result));
  }
  {
    auto out = open("metadata.json");
    out << metadata_json(result).dump(2) << '\n';
  }
}

}  // namespace linrep
