#include "qsnn/cli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

constexpr const char* kTrajectoryHeader = "t,out_x,out_z,input_fidelity";

std::string format17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(const RunReport& r) {
  return {{"schema_version", r.schema_version},
          {"command", r.command},
          {"seed", r.seed},
          {"parameters", r.parameters},
          {"fidelity", r.fidelity},
          {"timing", {{"elapsed_seconds", r.elapsed_seconds}}},
          {"artifacts", r.artifacts},
          {"results", r.results}};
}

RunReport report_from_json(const Json& j) {
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      throw Error(ErrorCode::kValidation, "unsupported report schema_version " + std::to_string(r.schema_version));
    }
    r.command = j.at("command").get<std::vector<std::string>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.parameters = j.at("parameters");
    r.fidelity = j.at("fidelity");
    r.elapsed_seconds = j.at("timing").at("elapsed_seconds").get<double>();
    r.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    r.results = j.at("results");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("malformed run report: ") + e.what());
  }
}

Json to_json(const FidelityReport& report, const std::vector<ProtocolState>& states) {
  Json per_state = Json::array();
  for (std::size_t i = 0; i < report.per_state.size(); ++i) {
    per_state.push_back({{"state", i < states.size() ? states[i].label : std::to_string(i)},
                         {"overlap", report.per_state[i]}});
  }
  return {{"f_avg", report.f_avg},
          {"leakage", report.leakage},
          {"subspace_dim", report.subspace_dim},
          {"per_state", per_state}};
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << kTrajectoryHeader << '\n';
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out << format17(traj.times[i]) << ',' << format17(traj.output_x[i]) << ','
        << format17(traj.output_z[i]) << ',' << format17(traj.input_fidelity[i]) << '\n';
  }
  if (!out) throw Error(ErrorCode::kInvalidArgument, "failed writing " + path.string());
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kValidation, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryHeader) {
    throw Error(ErrorCode::kValidation, path.string() + ": unexpected header");
  }
  Trajectory traj;
  std::vector<double>* columns[4] = {&traj.times, &traj.output_x, &traj.output_z, &traj.input_fidelity};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    for (int c = 0; c < 4; ++c) {
      if (!std::getline(row, cell, ',')) {
        throw Error(ErrorCode::kValidation, path.string() + ": short row '" + line + "'");
      }
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw Error(ErrorCode::kValidation, path.string() + ": bad number '" + cell + "'");
      }
      columns[c]->push_back(v);
    }
  }
  return traj;
}

}  // namespace qsnn
