#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsnn/cli/commands.hpp"
#include "qsnn/cli/report.hpp"
#include "qsnn/core/error.hpp"
#include "qsnn/network/serialization.hpp"

namespace qsnn {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qsnn_test_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

TEST(Report, RoundTrip) {
  RunReport r;
  r.command = {"qsnn", "neuron", "exc"};
  r.seed = 18446744073709551615ull;
  r.parameters = {{"k", 8}, {"l", 17}, {"gamma", 0.1 + 0.2}};
  r.fidelity = Json::array({{{"label", "protocol"}, {"f_avg", 0.99980909072453}}});
  r.elapsed_seconds = 1.25e-3;
  r.artifacts = {"out/exc_psi_plus.csv"};
  r.results = {{"values", {1e-300, -2.5, 3.141592653589793}}};
  const Json j = to_json(r);
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  const RunReport back = report_from_json(Json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.elapsed_seconds, r.elapsed_seconds);
}

TEST(Report, RejectsUnknownSchema) {
  Json j = to_json(RunReport{});
  j["schema_version"] = 99;
  EXPECT_THROW(report_from_json(j), Error);
}

TEST(Trajectory, CsvRoundTripIsBitExact) {
  Trajectory t;
  for (int i = 0; i < 50; ++i) {
    const double x = 0.1 * i + 1.0 / 3.0;
    t.times.push_back(x);
    t.output_x.push_back(std::sin(x) * 1e-17);
    t.output_z.push_back(-std::cos(x));
    t.input_fidelity.push_back(1.0 - std::exp(-x) * 1e-9);
  }
  const fs::path dir = scratch("csv");
  write_trajectory_csv(dir / "t.csv", t);
  std::ifstream f(dir / "t.csv");
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "t,out_x,out_z,input_fidelity");
  const Trajectory back = read_trajectory_csv(dir / "t.csv");
  EXPECT_EQ(back.times, t.times);
  EXPECT_EQ(back.output_x, t.output_x);
  EXPECT_EQ(back.output_z, t.output_z);
  EXPECT_EQ(back.input_fidelity, t.input_fidelity);
}

TEST(Trajectory, RejectsWrongHeader) {
  const fs::path dir = scratch("bad_csv");
  write_text(dir / "t.csv", "time,x,z,f\n0,0,0,1\n");
  EXPECT_THROW(read_trajectory_csv(dir / "t.csv"), Error);
}

TEST(NetworkSpecJson, RoundTrip) {
  for (TemplateKind kind : {TemplateKind::kFull, TemplateKind::kReduced}) {
    const NetworkSpec spec = make_template(kind);
    const Json j = to_json(spec);
    for (const char* key : {"num_qubits", "schedule", "input_qubits", "output_qubit", "run_mode"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
    const NetworkSpec back = network_spec_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(back.num_qubits, spec.num_qubits);
    ASSERT_EQ(back.schedule.size(), spec.schedule.size());
    for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
      EXPECT_EQ(back.schedule[i].kind, spec.schedule[i].kind);
      EXPECT_EQ(back.schedule[i].inputs, spec.schedule[i].inputs);
      EXPECT_EQ(back.schedule[i].output, spec.schedule[i].output);
      EXPECT_EQ(back.schedule[i].corrections, spec.schedule[i].corrections);
    }
  }
}

TEST(NetworkSpecJson, StrictParsing) {
  Json j = to_json(make_template(TemplateKind::kReduced));
  Json extra = j;
  extra["colour"] = "blue";
  EXPECT_THROW(network_spec_from_json(extra), Error);
  Json nested = j;
  nested["schedule"][0]["params"]["kk"] = 8;
  EXPECT_THROW(network_spec_from_json(nested), Error);
  Json wrong_type = j;
  wrong_type["num_qubits"] = "seven";
  EXPECT_THROW(network_spec_from_json(wrong_type), Error);
  Json minimal = j;
  minimal["schedule"][0]["params"] = Json::object();
  EXPECT_NO_THROW(network_spec_from_json(minimal));
}

TEST(Cli, NeuronExcWithTrajectories) {
  const fs::path dir = scratch("exc");
  const CliResult r = cli({"neuron", "exc", "--k", "8", "--l", "17", "--traj", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_NEAR(j.at("fidelity").at(0).at("f_avg").get<double>(), 0.9998, 5e-4);
  EXPECT_EQ(j.at("artifacts").size(), 4u);
  for (const auto& a : j.at("artifacts")) {
    const Trajectory t = read_trajectory_csv(a.get<std::string>());
    EXPECT_EQ(t.times.size(), 1000u);
  }
  EXPECT_EQ(j.at("seed"), 0);
  EXPECT_EQ(j.at("parameters").at("params").at("k"), 8.0);
}

TEST(Cli, NonPythagoreanExitsTwo) {
  const CliResult r = cli({"neuron", "exc", "--k", "2", "--l", "3"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("Pythagorean"), std::string::npos) << r.err;
}

TEST(Cli, PhaseTune) {
  const CliResult r = cli({"neuron", "phase", "--m", "3", "--n", "82", "--tune", "--budget", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  double tuned = 0;
  for (const auto& f : j.at("fidelity")) {
    if (f.at("label") == "tuned") tuned = f.at("f_avg").get<double>();
  }
  EXPECT_GE(tuned, 0.9955);
}

TEST(Cli, NetworkReducedInput) {
  const CliResult r = cli({"network", "run", "--template", "reduced", "--input", "Phi+,Phi+"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_GE(r.json().at("results").at("output").at("p_up").get<double>(), 0.97);
}

TEST(Cli, NetworkFullTruthTable) {
  const CliResult r = cli({"network", "run", "--template", "full", "--truth-table"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json table = r.json().at("results").at("truth_table");
  ASSERT_EQ(table.size(), 16u);
  int diagonal = 0;
  for (const auto& row : table) {
    if (row.at("first") == row.at("second")) {
      ++diagonal;
      EXPECT_GE(row.at("p_up").get<double>(), 0.97);
    }
  }
  EXPECT_EQ(diagonal, 4);
}

TEST(Cli, NetworkBadSpecExitsTwo) {
  const fs::path dir = scratch("spec");
  Json j = to_json(make_template(TemplateKind::kReduced));
  j["schedule"][1]["output"] = 12;
  write_text(dir / "bad.json", j.dump());
  const CliResult r = cli({"network", "run", "--spec", (dir / "bad.json").string(), "--input", "Phi+,Phi+"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("12"), std::string::npos) << r.err;

  write_text(dir / "good.json", to_json(make_template(TemplateKind::kReduced)).dump());
  const CliResult ok = cli({"network", "run", "--spec", (dir / "good.json").string(), "--input", "Phi+,Phi+"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
}

TEST(Cli, NetworkAmplitudesAndBackAction) {
  const CliResult r = cli({"network", "run", "--template", "reduced", "--amplitudes",
                           "0.7071067811865476,0,0,0.7071067811865476;0.7071067811865476,0,0,0.7071067811865476",
                           "--back-action", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_NEAR(j.at("results").at("output").at("p_up").get<double>(), 0.5, 0.03);
  EXPECT_TRUE(j.at("results").contains("back_action"));
}

TEST(Cli, ParamsExamples) {
  const CliResult triples = cli({"params", "triples", "--max-l", "30"});
  ASSERT_EQ(triples.code, kExitOk);
  const Json list = triples.json().at("results").at("triples");
  for (const Json& t : {Json{3, 4, 5}, Json{8, 15, 17}, Json{20, 21, 29}}) {
    EXPECT_NE(std::find(list.begin(), list.end(), t), list.end()) << t;
  }
  const CliResult fin = cli({"params", "solve-final", "--gamma", "1", "--l", "5", "--s", "4", "--k-parity", "even"});
  ASSERT_EQ(fin.code, kExitOk) << fin.err;
  EXPECT_NEAR(fin.json().at("results").at("beta").get<double>(), 4.7016, 1e-4);
  const CliResult det = cli({"params", "detuning", "--kind", "exc", "--k", "8", "--l", "17"});
  ASSERT_EQ(det.code, kExitOk) << det.err;
  EXPECT_NE(det.out.find("16"), std::string::npos);
  EXPECT_NE(det.out.find("18"), std::string::npos);
  EXPECT_NE(det.out.find("50"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"neuron", "exc", "--k", "eight"}).code, kExitValidation);
  EXPECT_EQ(cli({"network", "run", "--template", "reduced", "--input", "Phi+,Chi+"}).code, kExitValidation);
  const fs::path dir = scratch("exit");
  write_text(dir / "blocker", "");
  const CliResult r = cli({"--report", (dir / "blocker" / "r.json").string(), "params", "triples"});
  EXPECT_EQ(r.code, kExitRuntime) << r.err;
}

TEST(Cli, ReportFileMatchesStdout) {
  const fs::path dir = scratch("report");
  const CliResult r = cli({"--report", (dir / "r.json").string(), "params", "solve-exc", "--k", "8", "--l", "17"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream f(dir / "r.json");
  EXPECT_EQ(Json::parse(f), r.json());
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("QSNN_SEED", "4242", 1);
  const CliResult env = cli({"params", "triples"});
  const CliResult flag = cli({"--seed", "7", "params", "triples"});
  ::unsetenv("QSNN_SEED");
  EXPECT_EQ(env.json().at("seed"), 4242);
  EXPECT_EQ(flag.json().at("seed"), 7);
}

TEST(Cli, DeterministicMonteCarlo) {
  const std::vector<std::string> args = {"--seed", "5", "neuron", "phase", "--mc-samples", "200"};
  Json a = cli(args).json();
  Json b = cli(args).json();
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace qsnn
