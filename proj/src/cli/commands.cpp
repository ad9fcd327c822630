#include "qsnn/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qsnn/cli/report.hpp"
#include "qsnn/core/error.hpp"
#include "qsnn/network/network.hpp"
#include "qsnn/network/serialization.hpp"
#include "qsnn/params/detuning.hpp"
#include "qsnn/params/solvers.hpp"
#include "qsnn/params/tune.hpp"

namespace qsnn {

namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  double tol = kDefaultTolerance;
  std::string report_path;
};

struct ExcOptions {
  int k = 8;
  int l = 17;
  double k_real = 0.0;
  double l_real = 0.0;
  double gamma = 1.0;
  double amplitude = 1.0;
  int j_sign = 1;
  double detuning_floor = 10.0;
};

struct PhaseOptions {
  double m = 3.0;
  double n = 82.0;
  double amplitude = 1.0;
  double gamma = 1.0;
  std::string exchange = "full_j";
  bool relaxed = false;
};

struct FinalOptions {
  std::string variant = "upup";
  std::string drive = "rotating";
  int l = 17;
  int s = 5;
  std::string k_parity = "even";
  double gamma = 1.0;
  double amplitude = 1.0;
  double omega = 50.0;
};

struct NeuronOptions {
  std::string traj_dir;
  std::size_t samples = 1000;
  bool tune = false;
  std::size_t budget = 300;
  std::size_t mc_samples = 0;
};

struct NetworkOptions {
  std::string template_kind = "reduced";
  std::string spec_path;
  std::string input;
  std::string amplitudes;
  std::string mode;
  bool truth_table = false;
  std::string back_action;
};

struct ParamsOptions {
  int max_l = 30;
  std::string kind = "exc";
  bool general = false;
  int s = 0;
  int sign = 1;
};

std::uint64_t resolve_seed(const GlobalOptions& g) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("QSNN_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(ErrorCode::kValidation, "QSNN_SEED is not an unsigned integer");
    return v;
  }
  return 0;
}

int parity_from(const std::string& s) {
  if (s == "even") return 0;
  if (s == "odd") return 1;
  throw Error(ErrorCode::kValidation, "--k-parity must be 'even' or 'odd'");
}

ExcNeuronParams exc_params(const ExcOptions& o, bool relaxed) {
  ExcNeuronParams p;
  p.k = o.k;
  p.l = o.l;
  p.gamma = o.gamma;
  p.drive_amplitude = o.amplitude;
  p.j_sign = o.j_sign;
  p.detuning_floor = o.detuning_floor;
  if (relaxed) p.mode = ParamMode::kRelaxed;
  return p;
}

PhaseNeuronParams phase_params(const PhaseOptions& o) {
  PhaseNeuronParams p;
  p.m = o.m;
  p.n = o.n;
  p.drive_amplitude = o.amplitude;
  p.gamma = o.gamma;
  p.mode = o.relaxed ? ParamMode::kRelaxed : ParamMode::kConstraint;
  if (o.exchange == "full_j") {
    p.exchange = ExchangeConvention::kFullJ;
  } else if (o.exchange == "half_j") {
    p.exchange = ExchangeConvention::kHalfJ;
  } else {
    throw Error(ErrorCode::kValidation, "--exchange must be 'full_j' or 'half_j'");
  }
  return p;
}

FinalLayerParams final_params(const FinalOptions& o) {
  FinalLayerParams p;
  if (o.variant == "upup") {
    p.variant = FinalVariant::kDetectUpUp;
  } else if (o.variant == "downdown") {
    p.variant = FinalVariant::kDetectDownDown;
  } else {
    throw Error(ErrorCode::kValidation, "--variant must be 'upup' or 'downdown'");
  }
  if (o.drive == "rotating") {
    p.drive_mode = FinalDriveMode::kRotating;
  } else if (o.drive == "local_field") {
    p.drive_mode = FinalDriveMode::kLocalField;
  } else {
    throw Error(ErrorCode::kValidation, "--drive must be 'rotating' or 'local_field'");
  }
  p.l = o.l;
  p.s = o.s;
  p.parity_k = parity_from(o.k_parity);
  p.gamma = o.gamma;
  p.drive_amplitude = o.amplitude;
  p.omega = o.omega;
  return p;
}

Json derived_json(const NeuronSpec& spec) {
  Json d = Json::object();
  d["tau"] = activation_time(spec);
  if (const auto* p = std::get_if<ExcNeuronParams>(&spec.params)) {
    d["beta"] = p->beta();
    d["J"] = p->J();
    d["drive_frequency"] = p->drive_frequency();
  } else if (const auto* p = std::get_if<PhaseNeuronParams>(&spec.params)) {
    d["J"] = p->J();
    d["delta"] = p->delta();
    d["exchange_coefficient"] = p->exchange_coefficient();
  } else if (const auto* p = std::get_if<FinalLayerParams>(&spec.params)) {
    const auto sol = p->solution();
    d["beta"] = sol.beta;
    d["coupling_beta"] = p->coupling_beta();
    d["J"] = sol.J;
  }
  Json gates = Json::array();
  for (const auto& g : spec.corrections) {
    gates.push_back({{"stage", g.stage == GateStage::kBefore ? "before" : "after"},
                     {"gate", g.gate.name()},
                     {"angle", g.gate.angle}});
  }
  d["corrections"] = gates;
  return d;
}

Json detuning_json(const DetuningReport& r) {
  Json j = Json::object();
  for (const auto& e : r.entries) j[e.label] = e.ratio;
  return j;
}

std::string file_label(BellLabel b) {
  switch (b) {
    case BellLabel::kPsiPlus: return "psi_plus";
    case BellLabel::kPsiMinus: return "psi_minus";
    case BellLabel::kPhiPlus: return "phi_plus";
    case BellLabel::kPhiMinus: return "phi_minus";
  }
  return "unknown";
}

void emit(const RunReport& report, const GlobalOptions& g, std::ostream& out) {
  const std::string text = to_json(report).dump(2);
  if (!g.report_path.empty()) {
    std::ofstream f(g.report_path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write report " + g.report_path);
    f << text << '\n';
  }
  out << text << '\n';
}

void run_neuron(NeuronKind kind, const NeuronParams& params, const NeuronOptions& o,
                const GlobalOptions& g, RunReport& report) {
  const NeuronSpec spec = make_neuron(kind, params, {0, 1}, 2);
  report.parameters = {{"kind", to_string(kind)}, {"params", to_json(spec.params)}, {"derived", derived_json(spec)}};

  const auto states = protocol_states(kind);
  const FidelityReport fid = neuron_fidelity(spec, g.tol);
  Json f = to_json(fid, states);
  f["label"] = "protocol";
  if (o.mc_samples > 0) {
    const auto mc = mc_average_fidelity(neuron_unitary(spec, g.tol), ideal_unitary(spec),
                                        protocol_subspace(kind), o.mc_samples, report.seed);
    f["monte_carlo"] = {{"mean", mc.mean}, {"standard_error", mc.standard_error}, {"samples", mc.samples}};
  }
  report.fidelity.push_back(f);

  const SpectrumReport spectrum = spectrum_report(spec);
  Json blocks = Json::array();
  for (const auto& b : spectrum.blocks) {
    Json rows = Json::array();
    for (const auto& r : b.rows) rows.push_back({{"numeric", r.numeric}, {"predicted", r.predicted}});
    blocks.push_back({{"block", b.name}, {"max_deviation", b.max_deviation}, {"bound", b.bound}, {"rows", rows}});
  }
  report.results["spectrum"] = blocks;
  report.results["detuning"] = detuning_json(detuning_report(spec));
  if (const auto* p = std::get_if<PhaseNeuronParams>(&spec.params)) {
    report.results["warnings"] = hierarchy_warnings(*p);
  }

  if (o.tune) {
    TuneOptions topt;
    topt.budget = o.budget;
    topt.seed = report.seed;
    topt.tol = g.tol;
    const TuneResult t = tune(kind, params, topt);
    const NeuronSpec tuned = make_neuron(kind, t.tuned, {0, 1}, 2);
    Json tf = to_json(neuron_fidelity(tuned, g.tol), states);
    tf["label"] = "tuned";
    report.fidelity.push_back(tf);
    report.results["tune"] = {{"initial", to_json(t.initial)},
                              {"tuned", to_json(t.tuned)},
                              {"initial_fidelity", t.initial_fidelity},
                              {"final_fidelity", t.final_fidelity},
                              {"evaluations", t.evaluations},
                              {"status", to_string(t.status)}};
  }

  if (!o.traj_dir.empty()) {
    fs::create_directories(o.traj_dir);
    TrajectoryOptions topt;
    topt.samples = o.samples;
    topt.tol = g.tol;
    topt.include_pre_gates = kind == NeuronKind::kPhase;
    for (BellLabel b : kBellLabels) {
      const fs::path path = fs::path(o.traj_dir) / (to_string(kind) + "_" + file_label(b) + ".csv");
      write_trajectory_csv(path, record_trajectory(spec, b, topt));
      report.artifacts.push_back(path.string());
    }
  }
}

std::vector<std::pair<BellLabel, BellLabel>> parse_input_labels(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::kValidation, "--input expects 'A,B'");
  const auto a = parse_bell_label(text.substr(0, comma));
  const auto b = parse_bell_label(text.substr(comma + 1));
  if (!a || !b) throw Error(ErrorCode::kValidation, "unknown Bell label in '" + text + "'");
  return {{*a, *b}};
}

BellAmplitudes parse_amplitude_list(const std::string& text) {
  std::array<Complex, 4> a{};
  std::istringstream in(text);
  std::string cell;
  std::size_t i = 0;
  while (std::getline(in, cell, ',')) {
    if (i >= 4) throw Error(ErrorCode::kValidation, "expected 4 amplitudes per pair");
    char* end = nullptr;
    a[i++] = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str()) throw Error(ErrorCode::kValidation, "bad amplitude '" + cell + "'");
  }
  if (i != 4) throw Error(ErrorCode::kValidation, "expected 4 amplitudes per pair");
  return BellAmplitudes::from_array(a);
}

Json amplitudes_json(const BellAmplitudes& a) {
  Json j = Json::array();
  for (const auto& c : a.as_array()) j.push_back({c.real(), c.imag()});
  return j;
}

void run_network(const NetworkOptions& o, const GlobalOptions& g, RunReport& report) {
  NetworkSpec spec = o.spec_path.empty() ? make_template(parse_template_kind(o.template_kind))
                                         : load_network_spec(o.spec_path);
  if (!o.mode.empty()) spec.run_mode = parse_run_mode(o.mode);
  const auto issues = validate(spec);
  if (!issues.empty()) {
    Json list = Json::array();
    for (const auto& i : issues) list.push_back({{"entry", i.entry}, {"message", i.message}});
    report.results["violations"] = list;
  }
  report.parameters = {{"source", o.spec_path.empty() ? "template:" + o.template_kind : o.spec_path},
                       {"network", to_json(spec)}};
  const NetworkSimulator sim(spec, g.tol);

  for (const auto& entry : spec.schedule) {
    if (spec.run_mode == RunMode::kIdeal) break;
    Json f = to_json(neuron_fidelity(entry, g.tol), protocol_states(entry.kind));
    f["label"] = to_string(entry.kind) + "->" + std::to_string(entry.output);
    report.fidelity.push_back(f);
  }

  std::optional<std::pair<BellAmplitudes, BellAmplitudes>> input;
  if (!o.input.empty()) {
    const auto labels = parse_input_labels(o.input).front();
    input.emplace(BellAmplitudes::pure(labels.first), BellAmplitudes::pure(labels.second));
  } else if (!o.amplitudes.empty()) {
    const auto semi = o.amplitudes.find(';');
    if (semi == std::string::npos) throw Error(ErrorCode::kValidation, "--amplitudes expects 'a1,a2,a3,a4;b1,b2,b3,b4'");
    input.emplace(parse_amplitude_list(o.amplitudes.substr(0, semi)),
                  parse_amplitude_list(o.amplitudes.substr(semi + 1)));
  }
  if (!input && !o.truth_table) {
    throw Error(ErrorCode::kValidation, "provide --input, --amplitudes or --truth-table");
  }

  if (input) {
    const StateVector final_state = sim.run(input->first, input->second);
    const double p_up = sim.output_up_probability(final_state);
    report.results["input"] = {{"first", amplitudes_json(input->first)}, {"second", amplitudes_json(input->second)}};
    report.results["output"] = {{"p_up", p_up}, {"p_down", 1.0 - p_up}};
    report.results["kernel"] = {{"closed_form", bell_kernel(input->first, input->second)}, {"simulated", p_up}};
    if (!o.back_action.empty()) {
      std::vector<Outcome> outcomes;
      if (o.back_action == "up" || o.back_action == "both") outcomes.push_back(Outcome::kUp);
      if (o.back_action == "down" || o.back_action == "both") outcomes.push_back(Outcome::kDown);
      if (outcomes.empty()) throw Error(ErrorCode::kValidation, "--back-action must be up, down or both");
      Json ba = Json::array();
      for (Outcome oc : outcomes) {
        try {
          const auto r = back_action(final_state, spec, oc);
          Json overlaps = Json::array();
          for (const auto& x : r.overlaps) {
            overlaps.push_back({{"branch", x.name}, {"fidelity", x.fidelity}, {"support_weight", x.support_weight}});
          }
          ba.push_back({{"outcome", to_string(oc)}, {"probability", r.probability}, {"overlaps", overlaps}});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kDegenerateOutcome) throw;
          ba.push_back({{"outcome", to_string(oc)}, {"degenerate", true}, {"message", e.what()}});
        }
      }
      report.results["back_action"] = ba;
    }
  }

  if (o.truth_table) {
    Json rows = Json::array();
    for (const auto& r : truth_table(sim, g.jobs)) {
      rows.push_back({{"first", std::string(to_string(r.first))},
                      {"second", std::string(to_string(r.second))},
                      {"p_up", r.p_up}});
    }
    report.results["truth_table"] = rows;
  }
}

Json triple_json(const PythagoreanTriple& t) { return Json::array({t.a, t.b, t.c}); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spiking quantum neuron simulator"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "RNG seed (default: $QSNN_SEED or 0)");
  app.add_option("--jobs", g.jobs, "Threads for independent scan points")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Integrator tolerance")->check(CLI::PositiveNumber);
  app.add_option("--report", g.report_path, "Also write the JSON report to this file");

  // neuron
  auto* neuron = app.add_subcommand("neuron", "Simulate one neuron and report its fidelity");
  neuron->require_subcommand(1);
  NeuronOptions nopt;
  auto add_neuron_common = [&nopt](CLI::App* sub, bool tunable) {
    sub->add_option("--traj", nopt.traj_dir, "Directory for one trajectory CSV per Bell input");
    sub->add_option("--samples", nopt.samples, "Trajectory samples")->check(CLI::Range(2, 1000000));
    sub->add_option("--mc-samples", nopt.mc_samples, "Also estimate the fidelity by Monte Carlo");
    if (tunable) {
      sub->add_flag("--tune", nopt.tune, "Tune the continuous parameters within +-2%");
      sub->add_option("--budget", nopt.budget, "Tuner evaluation budget")->check(CLI::PositiveNumber);
    }
  };
  ExcOptions eopt;
  auto* exc = neuron->add_subcommand("exc", "Excitation-parity neuron");
  exc->add_option("--k", eopt.k, "beta = k A");
  exc->add_option("--l", eopt.l, "sqrt(J^2 + beta^2) = l A");
  exc->add_option("--gamma", eopt.gamma, "ZZ anisotropy");
  exc->add_option("--A", eopt.amplitude, "Drive amplitude");
  exc->add_option("--j-sign", eopt.j_sign, "Sign of J")->check(CLI::IsMember({-1, 1}));
  exc->add_option("--detuning-floor", eopt.detuning_floor, "Minimum detuning ratio");
  add_neuron_common(exc, true);

  PhaseOptions popt;
  auto* phase = neuron->add_subcommand("phase", "Relative-phase neuron");
  phase->add_option("--m", popt.m, "delta = 2 m B");
  phase->add_option("--n", popt.n, "J = 2 n B");
  phase->add_option("--B", popt.amplitude, "Local field amplitude");
  phase->add_option("--gamma", popt.gamma, "ZZ anisotropy");
  phase->add_option("--exchange", popt.exchange, "full_j or half_j");
  phase->add_flag("--relaxed", popt.relaxed, "Accept non-integer m, n");
  add_neuron_common(phase, true);

  FinalOptions fopt;
  auto* fin = neuron->add_subcommand("final", "Final-layer coincidence neuron");
  fin->add_option("--variant", fopt.variant, "upup or downdown");
  fin->add_option("--drive", fopt.drive, "rotating or local_field");
  fin->add_option("--l", fopt.l, "l");
  fin->add_option("--s", fopt.s, "s");
  fin->add_option("--k-parity", fopt.k_parity, "even or odd");
  fin->add_option("--gamma", fopt.gamma, "ZZ anisotropy");
  fin->add_option("--A", fopt.amplitude, "Drive amplitude");
  fin->add_option("--omega", fopt.omega, "Local field (local_field mode)");
  add_neuron_common(fin, false);

  // network
  auto* network = app.add_subcommand("network", "Bell-state comparison networks");
  network->require_subcommand(1);
  NetworkOptions wopt;
  auto* run = network->add_subcommand("run", "Run a network");
  auto* tmpl = run->add_option("--template", wopt.template_kind, "full or reduced");
  run->add_option("--spec", wopt.spec_path, "Network spec JSON")->excludes(tmpl);
  run->add_option("--input", wopt.input, "Bell labels, e.g. \"Phi+,Phi+\"");
  run->add_option("--amplitudes", wopt.amplitudes,
                  "Real amplitudes (Psi+,Psi-,Phi+,Phi-) per pair: \"a1,a2,a3,a4;b1,b2,b3,b4\"");
  run->add_option("--mode", wopt.mode, "embedded_unitary, full_dynamics or ideal");
  run->add_flag("--truth-table", wopt.truth_table, "All 16 pure Bell-pair inputs");
  run->add_option("--back-action", wopt.back_action, "up, down or both");

  // params
  auto* params = app.add_subcommand("params", "Parameter solvers");
  params->require_subcommand(1);
  ParamsOptions qopt;
  auto* triples = params->add_subcommand("triples", "Pythagorean triples");
  triples->add_option("--max-l", qopt.max_l, "Largest hypotenuse")->check(CLI::PositiveNumber);
  auto* solve_exc_cmd = params->add_subcommand("solve-exc", "Excitation-neuron constraints");
  solve_exc_cmd->add_option("--k", eopt.k, "k")->required();
  solve_exc_cmd->add_option("--l", eopt.l, "l")->required();
  solve_exc_cmd->add_option("--A", eopt.amplitude, "Drive amplitude");
  solve_exc_cmd->add_flag("--general", qopt.general, "General gamma instead of gamma = 1");
  solve_exc_cmd->add_option("--s", qopt.s, "s for the general gamma");
  solve_exc_cmd->add_option("--sign", qopt.sign, "Sign for the general gamma")->check(CLI::IsMember({-1, 1}));
  auto* solve_phase_cmd = params->add_subcommand("solve-phase", "Phase-neuron constraints");
  solve_phase_cmd->add_option("--m", popt.m, "m")->required();
  solve_phase_cmd->add_option("--n", popt.n, "n")->required();
  solve_phase_cmd->add_option("--B", popt.amplitude, "Local field amplitude");
  auto* solve_final_cmd = params->add_subcommand("solve-final", "Final-layer beta");
  solve_final_cmd->add_option("--gamma", fopt.gamma, "ZZ anisotropy");
  solve_final_cmd->add_option("--l", fopt.l, "l")->required();
  solve_final_cmd->add_option("--s", fopt.s, "s")->required();
  solve_final_cmd->add_option("--k-parity", fopt.k_parity, "even or odd");
  solve_final_cmd->add_option("--A", fopt.amplitude, "Drive amplitude");
  auto* detuning = params->add_subcommand("detuning", "Detuning-to-drive ratios");
  detuning->add_option("--kind", qopt.kind, "exc, phase or final");
  detuning->add_option("--k", eopt.k, "k (exc)");
  detuning->add_option("--l", eopt.l, "l (exc, final)");
  detuning->add_option("--m", popt.m, "m (phase)");
  detuning->add_option("--n", popt.n, "n (phase)");
  detuning->add_option("--s", fopt.s, "s (final)");
  detuning->add_option("--drive", fopt.drive, "rotating or local_field (final)");
  detuning->add_option("--omega", fopt.omega, "Local field (final)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = args;
  report.command.insert(report.command.begin(), "qsnn");
  try {
    report.seed = resolve_seed(g);
    if (exc->parsed()) {
      run_neuron(NeuronKind::kExcitation, exc_params(eopt, nopt.tune), nopt, g, report);
    } else if (phase->parsed()) {
      run_neuron(NeuronKind::kPhase, phase_params(popt), nopt, g, report);
    } else if (fin->parsed()) {
      const FinalLayerParams p = final_params(fopt);
      const NeuronKind kind = p.variant == FinalVariant::kDetectUpUp ? NeuronKind::kFinalUpUp : NeuronKind::kFinalDownDown;
      run_neuron(kind, p, nopt, g, report);
    } else if (run->parsed()) {
      run_network(wopt, g, report);
    } else if (triples->parsed()) {
      Json list = Json::array();
      for (const auto& t : pythagorean_triples(qopt.max_l)) list.push_back(triple_json(t));
      report.parameters = {{"max_l", qopt.max_l}};
      report.results["triples"] = list;
    } else if (solve_exc_cmd->parsed()) {
      const GammaMode gm = qopt.general ? GammaMode::general(qopt.s, qopt.sign) : GammaMode::make_unity();
      const ExcNeuronParams p = solve_exc(eopt.k, eopt.l, eopt.amplitude, gm);
      report.parameters = {{"k", eopt.k}, {"l", eopt.l}, {"A", eopt.amplitude}, {"gamma_mode", qopt.general ? "general" : "unity"}};
      report.results = {{"beta", p.beta()}, {"J", p.J()}, {"gamma", p.gamma}, {"tau", p.tau()}};
    } else if (solve_phase_cmd->parsed()) {
      const PhaseSolution sol = solve_phase(popt.m, popt.n, popt.amplitude);
      report.parameters = {{"m", popt.m}, {"n", popt.n}, {"B", popt.amplitude}};
      report.results = {{"J", sol.params.J()}, {"delta", sol.params.delta()}, {"tau", sol.params.tau()},
                        {"warnings", sol.warnings}};
    } else if (solve_final_cmd->parsed()) {
      const int parity = parity_from(fopt.k_parity);
      const FinalBeta b = solve_final_beta(fopt.gamma, fopt.l, fopt.s, parity, fopt.amplitude);
      report.parameters = {{"gamma", fopt.gamma}, {"l", fopt.l}, {"s", fopt.s}, {"k_parity", fopt.k_parity}, {"A", fopt.amplitude}};
      report.results = {{"beta", b.beta}, {"J", b.J}};
    } else if (detuning->parsed()) {
      NeuronSpec spec;
      if (qopt.kind == "exc") {
        ExcNeuronParams p = exc_params(eopt, false);
        p.detuning_floor = 0.0;
        spec = make_neuron(NeuronKind::kExcitation, p, {0, 1}, 2);
      } else if (qopt.kind == "phase") {
        spec = make_neuron(NeuronKind::kPhase, phase_params(popt), {0, 1}, 2);
      } else if (qopt.kind == "final") {
        const FinalLayerParams p = final_params(fopt);
        spec = make_neuron(NeuronKind::kFinalUpUp, p, {0, 1}, 2);
      } else {
        throw Error(ErrorCode::kValidation, "--kind must be exc, phase or final");
      }
      report.parameters = {{"kind", to_string(spec.kind)}, {"params", to_json(spec.params)}};
      report.results = detuning_json(detuning_report(spec));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    emit(report, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace qsnn
