#include "qsnn/network/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <string>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

[[noreturn]] void reject(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kValidation, where + ": " + what);
}

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) reject(where, "expected an object");
}

void only_fields(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  require_object(j, where);
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) reject(where, "unknown field '" + key + "'");
  }
}

double number(const Json& j, const std::string& where, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) reject(where, std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

int integer(const Json& j, const std::string& where, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) reject(where, std::string("field '") + key + "' must be an integer");
  return j[key].get<int>();
}

std::string text(const Json& j, const std::string& where, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) reject(where, std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

int required_int(const Json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) reject(where, std::string("missing field '") + key + "'");
  return integer(j, where, key, 0);
}

ParamMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "constraint") return ParamMode::kConstraint;
  if (s == "relaxed") return ParamMode::kRelaxed;
  reject(where, "mode must be 'constraint' or 'relaxed'");
}

}  // namespace

Json to_json(const ExcNeuronParams& p) {
  return {{"k", p.k},
          {"l", p.l},
          {"gamma", p.gamma},
          {"A", p.drive_amplitude},
          {"j_sign", p.j_sign},
          {"mode", to_string(p.mode)},
          {"detuning_floor", p.detuning_floor}};
}

Json to_json(const PhaseNeuronParams& p) {
  return {{"m", p.m},
          {"n", p.n},
          {"B", p.drive_amplitude},
          {"gamma", p.gamma},
          {"mode", to_string(p.mode)},
          {"exchange", to_string(p.exchange)},
          {"floors",
           {{"min_four_m", p.floors.min_four_m},
            {"min_ratio", p.floors.min_ratio},
            {"recommended_ratio", p.floors.recommended_ratio}}}};
}

Json to_json(const FinalLayerParams& p) {
  return {{"l", p.l},
          {"s", p.s},
          {"parity_k", p.parity_k},
          {"gamma", p.gamma},
          {"A", p.drive_amplitude},
          {"drive_mode", to_string(p.drive_mode)},
          {"omega", p.omega},
          {"omega_floor", p.omega_floor}};
}

Json to_json(const NeuronParams& p) {
  return std::visit([](const auto& x) { return to_json(x); }, p);
}

Json to_json(const NeuronSpec& spec) {
  return {{"kind", to_string(spec.kind)},
          {"params", to_json(spec.params)},
          {"inputs", {spec.inputs[0], spec.inputs[1]}},
          {"output", spec.output}};
}

Json to_json(const NetworkSpec& spec) {
  Json schedule = Json::array();
  for (const auto& n : spec.schedule) schedule.push_back(to_json(n));
  return {{"num_qubits", spec.num_qubits},
          {"schedule", schedule},
          {"input_qubits", spec.input_qubits},
          {"output_qubit", spec.output_qubit},
          {"run_mode", to_string(spec.run_mode)}};
}

ExcNeuronParams exc_params_from_json(const Json& j) {
  const std::string where = "excitation params";
  only_fields(j, where, {"k", "l", "gamma", "A", "j_sign", "mode", "detuning_floor"});
  ExcNeuronParams p;
  p.k = number(j, where, "k", p.k);
  p.l = number(j, where, "l", p.l);
  p.gamma = number(j, where, "gamma", p.gamma);
  p.drive_amplitude = number(j, where, "A", p.drive_amplitude);
  p.j_sign = integer(j, where, "j_sign", p.j_sign);
  p.mode = parse_mode(text(j, where, "mode", to_string(p.mode)), where);
  p.detuning_floor = number(j, where, "detuning_floor", p.detuning_floor);
  return p;
}

PhaseNeuronParams phase_params_from_json(const Json& j) {
  const std::string where = "phase params";
  only_fields(j, where, {"m", "n", "B", "gamma", "mode", "exchange", "floors"});
  PhaseNeuronParams p;
  p.m = number(j, where, "m", p.m);
  p.n = number(j, where, "n", p.n);
  p.drive_amplitude = number(j, where, "B", p.drive_amplitude);
  p.gamma = number(j, where, "gamma", p.gamma);
  p.mode = parse_mode(text(j, where, "mode", to_string(p.mode)), where);
  const std::string ex = text(j, where, "exchange", to_string(p.exchange));
  if (ex == "full_j") {
    p.exchange = ExchangeConvention::kFullJ;
  } else if (ex == "half_j") {
    p.exchange = ExchangeConvention::kHalfJ;
  } else {
    reject(where, "exchange must be 'full_j' or 'half_j'");
  }
  if (j.contains("floors")) {
    const Json& f = j["floors"];
    only_fields(f, "phase floors", {"min_four_m", "min_ratio", "recommended_ratio"});
    p.floors.min_four_m = number(f, "phase floors", "min_four_m", p.floors.min_four_m);
    p.floors.min_ratio = number(f, "phase floors", "min_ratio", p.floors.min_ratio);
    p.floors.recommended_ratio = number(f, "phase floors", "recommended_ratio", p.floors.recommended_ratio);
  }
  return p;
}

FinalLayerParams final_params_from_json(const Json& j, FinalVariant variant) {
  const std::string where = "final-layer params";
  only_fields(j, where, {"l", "s", "parity_k", "gamma", "A", "drive_mode", "omega", "omega_floor"});
  FinalLayerParams p;
  p.variant = variant;
  p.l = integer(j, where, "l", p.l);
  p.s = integer(j, where, "s", p.s);
  p.parity_k = integer(j, where, "parity_k", p.parity_k);
  p.gamma = number(j, where, "gamma", p.gamma);
  p.drive_amplitude = number(j, where, "A", p.drive_amplitude);
  const std::string mode = text(j, where, "drive_mode", to_string(p.drive_mode));
  if (mode == "rotating") {
    p.drive_mode = FinalDriveMode::kRotating;
  } else if (mode == "local_field") {
    p.drive_mode = FinalDriveMode::kLocalField;
  } else {
    reject(where, "drive_mode must be 'rotating' or 'local_field'");
  }
  p.omega = number(j, where, "omega", p.omega);
  p.omega_floor = number(j, where, "omega_floor", p.omega_floor);
  return p;
}

NeuronSpec neuron_spec_from_json(const Json& j) {
  const std::string where = "schedule entry";
  only_fields(j, where, {"kind", "params", "inputs", "output"});
  if (!j.contains("kind") || !j["kind"].is_string()) reject(where, "missing string field 'kind'");
  NeuronKind kind;
  try {
    kind = parse_neuron_kind(j["kind"].get<std::string>());
  } catch (const Error& e) {
    reject(where, e.what());
  }
  const Json params = j.contains("params") ? j["params"] : Json::object();
  if (!j.contains("inputs") || !j["inputs"].is_array() || j["inputs"].size() != 2 ||
      !j["inputs"][0].is_number_integer() || !j["inputs"][1].is_number_integer()) {
    reject(where, "'inputs' must be an array of two integers");
  }
  NeuronSpec spec;
  spec.kind = kind;
  switch (kind) {
    case NeuronKind::kExcitation: spec.params = exc_params_from_json(params); break;
    case NeuronKind::kPhase: spec.params = phase_params_from_json(params); break;
    case NeuronKind::kFinalUpUp:
      spec.params = final_params_from_json(params, FinalVariant::kDetectUpUp);
      break;
    case NeuronKind::kFinalDownDown:
      spec.params = final_params_from_json(params, FinalVariant::kDetectDownDown);
      break;
  }
  spec.inputs = {j["inputs"][0].get<int>(), j["inputs"][1].get<int>()};
  spec.output = required_int(j, where, "output");
  return spec;
}

NetworkSpec network_spec_from_json(const Json& j) {
  const std::string where = "network spec";
  only_fields(j, where, {"num_qubits", "schedule", "input_qubits", "output_qubit", "run_mode"});
  NetworkSpec spec;
  spec.num_qubits = required_int(j, where, "num_qubits");
  spec.output_qubit = required_int(j, where, "output_qubit");
  if (!j.contains("input_qubits") || !j["input_qubits"].is_array() || j["input_qubits"].size() != 4) {
    reject(where, "'input_qubits' must be an array of four integers");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j["input_qubits"][i].is_number_integer()) reject(where, "'input_qubits' must hold integers");
    spec.input_qubits[i] = j["input_qubits"][i].get<int>();
  }
  if (!j.contains("schedule") || !j["schedule"].is_array()) reject(where, "'schedule' must be an array");
  for (const auto& entry : j["schedule"]) spec.schedule.push_back(neuron_spec_from_json(entry));
  try {
    spec.run_mode = parse_run_mode(text(j, where, "run_mode", to_string(spec.run_mode)));
  } catch (const Error& e) {
    reject(where, e.what());
  }
  // Corrections follow from the schedule; parameter problems surface through validate().
  for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
    const bool last_writer = std::none_of(
        spec.schedule.begin() + static_cast<std::ptrdiff_t>(i) + 1, spec.schedule.end(),
        [&](const NeuronSpec& later) { return later.output == spec.schedule[i].output; });
    try {
      spec.schedule[i].corrections =
          standard_corrections(spec.schedule[i].kind, spec.schedule[i].params, last_writer);
    } catch (const Error&) {
      // Left empty; validate() reports the parameter problem.
    }
  }
  return spec;
}

NetworkSpec load_network_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kValidation, "cannot open network spec " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kValidation, "malformed JSON in " + path.string() + ": " + e.what());
  }
  return network_spec_from_json(j);
}

}  // namespace qsnn
