#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qsnn/fidelity/fidelity.hpp"
#include "qsnn/neuron/neuron.hpp"
#include "qsnn/network/serialization.hpp"

namespace qsnn {

inline constexpr int kReportSchemaVersion = 1;

struct RunReport {
  int schema_version = kReportSchemaVersion;
  std::vector<std::string> command;
  std::uint64_t seed = 0;
  Json parameters = Json::object();
  Json fidelity = Json::array();
  double elapsed_seconds = 0.0;
  std::vector<std::string> artifacts;
  Json results = Json::object();
};

Json to_json(const RunReport& report);
RunReport report_from_json(const Json& j);

Json to_json(const FidelityReport& report, const std::vector<ProtocolState>& states);

/// Header `t,out_x,out_z,input_fidelity`, 17 significant digits.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

}  // namespace qsnn
