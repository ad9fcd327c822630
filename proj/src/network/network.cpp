#include "qsnn/network/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <thread>

#include "qsnn/core/error.hpp"
#include "qsnn/core/gates.hpp"
#include "qsnn/core/observables.hpp"

namespace qsnn {

namespace {

constexpr int kInputQubits = 4;

bool same_neuron(const NeuronSpec& a, const NeuronSpec& b) {
  return a.kind == b.kind && a.params == b.params && a.corrections == b.corrections;
}

Matrix local_operator(const NeuronSpec& entry, RunMode mode, double tol) {
  return mode == RunMode::kIdeal ? ideal_unitary(entry).matrix()
                                 : neuron_unitary(entry, tol).matrix();
}

}  // namespace

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::kEmbeddedUnitary: return "embedded_unitary";
    case RunMode::kFullDynamics: return "full_dynamics";
    case RunMode::kIdeal: return "ideal";
  }
  return "unknown";
}

RunMode parse_run_mode(const std::string& text) {
  if (text == "embedded_unitary" || text == "embedded") return RunMode::kEmbeddedUnitary;
  if (text == "full_dynamics" || text == "full") return RunMode::kFullDynamics;
  if (text == "ideal") return RunMode::kIdeal;
  throw Error(ErrorCode::kInvalidArgument, "unknown run mode '" + text + "'");
}

std::string to_string(TemplateKind kind) { return kind == TemplateKind::kFull ? "full" : "reduced"; }

TemplateKind parse_template_kind(const std::string& text) {
  if (text == "full") return TemplateKind::kFull;
  if (text == "reduced") return TemplateKind::kReduced;
  throw Error(ErrorCode::kInvalidArgument, "unknown template '" + text + "'");
}

std::string to_string(Outcome outcome) { return outcome == Outcome::kUp ? "up" : "down"; }

void assign_output_phases(std::vector<NeuronSpec>& schedule) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const bool last_writer =
        std::none_of(schedule.begin() + static_cast<std::ptrdiff_t>(i) + 1, schedule.end(),
                     [&](const NeuronSpec& later) { return later.output == schedule[i].output; });
    schedule[i].corrections = standard_corrections(schedule[i].kind, schedule[i].params, last_writer);
  }
}

NetworkSpec make_template(TemplateKind kind, const NetworkParams& params) {
  NetworkSpec spec;
  auto exc = [&](int a, int b, int out) {
    return make_neuron(NeuronKind::kExcitation, params.exc, {a, b}, out);
  };
  auto phase = [&](int a, int b, int out) {
    return make_neuron(NeuronKind::kPhase, params.phase, {a, b}, out);
  };
  FinalLayerParams final_params = params.final_layer;
  if (kind == TemplateKind::kFull) {
    final_params.variant = FinalVariant::kDetectUpUp;
    spec.num_qubits = 11;
    spec.schedule = {exc(0, 1, 5), phase(0, 1, 4), exc(2, 3, 7), phase(2, 3, 6),
                     exc(4, 6, 8),   exc(5, 7, 9),
                     make_neuron(NeuronKind::kFinalUpUp, final_params, {8, 9}, 10)};
    spec.output_qubit = 10;
  } else {
    final_params.variant = FinalVariant::kDetectDownDown;
    spec.num_qubits = 7;
    spec.schedule = {exc(0, 1, 5), exc(2, 3, 5), phase(0, 1, 4), phase(2, 3, 4),
                     make_neuron(NeuronKind::kFinalDownDown, final_params, {4, 5}, 6)};
    spec.output_qubit = 6;
  }
  assign_output_phases(spec.schedule);
  return spec;
}

std::vector<ValidationIssue> validate(const NetworkSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto issue = [&issues](int entry, std::string msg) { issues.push_back({entry, std::move(msg)}); };
  const int n = spec.num_qubits;
  if (n < 5 || n > 24) {
    issue(-1, "num_qubits = " + std::to_string(n) + " outside [5, 24]");
    return issues;
  }
  auto in_bounds = [n](int q) { return q >= 0 && q < n; };

  std::set<int> inputs;
  for (int q : spec.input_qubits) {
    if (!in_bounds(q)) issue(-1, "input qubit " + std::to_string(q) + " out of bounds");
    if (!inputs.insert(q).second) issue(-1, "input qubit " + std::to_string(q) + " listed twice");
  }
  if (!in_bounds(spec.output_qubit)) {
    issue(-1, "output qubit " + std::to_string(spec.output_qubit) + " out of bounds");
  }
  if (inputs.count(spec.output_qubit)) issue(-1, "output qubit is an input qubit");
  if (spec.schedule.empty()) {
    issue(-1, "schedule is empty");
    return issues;
  }
  if (spec.schedule.back().output != spec.output_qubit) {
    issue(static_cast<int>(spec.schedule.size()) - 1,
          "final schedule entry writes qubit " + std::to_string(spec.schedule.back().output) +
              ", not the output qubit " + std::to_string(spec.output_qubit));
  }

  std::set<int> written;
  for (std::size_t i = 0; i < spec.schedule.size(); ++i) {
    const auto& entry = spec.schedule[i];
    const int idx = static_cast<int>(i);
    try {
      validate(entry, n);
    } catch (const Error& e) {
      issue(idx, e.what());
      continue;
    }
    if (inputs.count(entry.output)) {
      issue(idx, "writes input qubit " + std::to_string(entry.output));
    }
    for (int q : entry.inputs) {
      if (!inputs.count(q) && !written.count(q)) {
        issue(idx, "reads qubit " + std::to_string(q) + " before any neuron writes it");
      }
      for (std::size_t j = i + 1; j < spec.schedule.size(); ++j) {
        if (spec.schedule[j].output == q) {
          issue(idx, "reads qubit " + std::to_string(q) + " that entry " + std::to_string(j) +
                         " writes later");
          break;
        }
      }
    }
    written.insert(entry.output);
  }
  return issues;
}

BellAmplitudes BellAmplitudes::pure(BellLabel label) {
  std::array<Complex, 4> a{};
  a[static_cast<std::size_t>(label)] = 1.0;
  return from_array(a);
}

BellAmplitudes BellAmplitudes::from_array(const std::array<Complex, 4>& a) {
  return {a[0], a[1], a[2], a[3]};
}

std::array<Complex, 4> BellAmplitudes::as_array() const {
  return {psi_plus, psi_minus, phi_plus, phi_minus};
}

double BellAmplitudes::norm_squared() const {
  double s = 0.0;
  for (const auto& c : as_array()) s += std::norm(c);
  return s;
}

Vector BellAmplitudes::pair_vector() const {
  if (std::abs(norm_squared() - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNormalization,
                "Bell amplitudes have squared norm " + std::to_string(norm_squared()));
  }
  Vector v = Vector::Zero(4);
  const auto a = as_array();
  for (std::size_t i = 0; i < 4; ++i) v += a[i] * bell_vector(kBellLabels[i]);
  return v;
}

NetworkSimulator::NetworkSimulator(NetworkSpec spec, double tol) : spec_(std::move(spec)), tol_(tol) {
  const auto issues = validate(spec_);
  if (!issues.empty()) {
    std::string msg = "network spec has " + std::to_string(issues.size()) + " violation(s)";
    for (const auto& i : issues) {
      msg += "; " + (i.entry >= 0 ? "entry " + std::to_string(i.entry) + ": " : std::string()) + i.message;
    }
    throw Error(ErrorCode::kValidation, msg);
  }
  if (spec_.run_mode == RunMode::kFullDynamics) return;
  for (std::size_t i = 0; i < spec_.schedule.size(); ++i) {
    const auto& entry = spec_.schedule[i];
    std::size_t j = 0;
    while (j < i && !same_neuron(spec_.schedule[j], entry)) ++j;
    local_ops_.push_back(j < i ? local_ops_[j] : local_operator(entry, spec_.run_mode, tol_));
  }
}

StateVector NetworkSimulator::prepare(const BellAmplitudes& first, const BellAmplitudes& second) const {
  return prepare(StateVector::from_amplitudes(kron(first.pair_vector(), second.pair_vector())));
}

StateVector NetworkSimulator::prepare(const StateVector& input_register) const {
  if (input_register.num_qubits() != kInputQubits) {
    throw Error(ErrorCode::kDimensionMismatch, "input register must have 4 qubits");
  }
  const int n = spec_.num_qubits;
  Vector full = Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
  for (std::size_t i = 0; i < input_register.dim(); ++i) {
    std::size_t index = 0;
    for (int j = 0; j < kInputQubits; ++j) {
      if (i & qubit_mask(j, kInputQubits)) {
        index |= qubit_mask(spec_.input_qubits[static_cast<std::size_t>(j)], n);
      }
    }
    full(static_cast<Eigen::Index>(index)) = input_register[i];
  }
  return StateVector::from_amplitudes(std::move(full));
}

StateVector NetworkSimulator::run(const StateVector& prepared) const {
  if (prepared.num_qubits() != spec_.num_qubits) {
    throw Error(ErrorCode::kDimensionMismatch, "prepared state does not match the network register");
  }
  if (spec_.run_mode == RunMode::kFullDynamics) {
    StateVector psi = prepared;
    for (const auto& entry : spec_.schedule) psi = apply_neuron(psi, entry, tol_);
    return psi;
  }
  Vector amps = prepared.amplitudes();
  for (std::size_t i = 0; i < spec_.schedule.size(); ++i) {
    const auto targets = spec_.schedule[i].targets();
    apply_local(amps, spec_.num_qubits, local_ops_[i], targets);
  }
  return StateVector::from_amplitudes(std::move(amps), true);
}

StateVector NetworkSimulator::run(const BellAmplitudes& first, const BellAmplitudes& second) const {
  return run(prepare(first, second));
}

double NetworkSimulator::output_up_probability(const StateVector& final_state) const {
  return excitation_probability(final_state, spec_.output_qubit);
}

std::vector<TruthTableRow> truth_table(const NetworkSimulator& sim, unsigned jobs) {
  std::vector<TruthTableRow> rows;
  for (BellLabel a : kBellLabels) {
    for (BellLabel b : kBellLabels) rows.push_back({a, b, 0.0});
  }
  auto work = [&sim, &rows](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < rows.size(); i += stride) {
      const auto out = sim.run(BellAmplitudes::pure(rows[i].first), BellAmplitudes::pure(rows[i].second));
      rows[i].p_up = sim.output_up_probability(out);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, rows.size());
  if (threads == 1) {
    work(0, 1);
    return rows;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();
  return rows;
}

std::vector<NamedState> superposition_branches() {
  const double s = 1.0 / std::numbers::sqrt2;
  auto pair = [](BellLabel a, BellLabel b) { return kron(bell_vector(a), bell_vector(b)); };
  return {
      {"identical", s * (pair(BellLabel::kPhiMinus, BellLabel::kPhiMinus) +
                         pair(BellLabel::kPsiPlus, BellLabel::kPsiPlus))},
      {"different", s * (pair(BellLabel::kPsiPlus, BellLabel::kPhiMinus) +
                         pair(BellLabel::kPhiMinus, BellLabel::kPsiPlus))},
  };
}

Matrix input_register_density(const StateVector& state, const NetworkSpec& spec) {
  return reduced_density_matrix(state, {spec.input_qubits.begin(), spec.input_qubits.end()});
}

BackActionReport back_action(const StateVector& final_state, const NetworkSpec& spec,
                             Outcome outcome, const std::vector<NamedState>& branches) {
  const MeasurementOutcome m = measure(final_state, spec.output_qubit);
  const auto& post = outcome == Outcome::kUp ? m.post_up : m.post_down;
  BackActionReport report;
  report.outcome = outcome;
  report.probability = outcome == Outcome::kUp ? m.p_up : m.p_down;
  if (!post) {
    throw Error(ErrorCode::kDegenerateOutcome,
                "outcome " + to_string(outcome) + " has probability " +
                    std::to_string(report.probability));
  }
  report.input_density = input_register_density(*post, spec);

  std::vector<Vector> pair_basis;
  for (BellLabel a : kBellLabels) {
    for (BellLabel b : kBellLabels) pair_basis.push_back(kron(bell_vector(a), bell_vector(b)));
  }
  for (const auto& branch : branches) {
    if (branch.vector.size() != 16) {
      throw Error(ErrorCode::kDimensionMismatch, "branch '" + branch.name + "' is not a 4-qubit state");
    }
    BranchOverlap o;
    o.name = branch.name;
    o.fidelity = branch.vector.dot(report.input_density * branch.vector).real();
    for (const auto& e : pair_basis) {
      if (std::abs(e.dot(branch.vector)) > 1e-12) o.support_weight += e.dot(report.input_density * e).real();
    }
    report.overlaps.push_back(o);
  }
  return report;
}

double bell_kernel(const BellAmplitudes& a, const BellAmplitudes& b) {
  for (const auto* x : {&a, &b}) {
    if (std::abs(x->norm_squared() - 1.0) > 1e-9) {
      throw Error(ErrorCode::kNormalization, "Bell amplitudes are not normalized");
    }
  }
  const auto xa = a.as_array();
  const auto xb = b.as_array();
  double k = 0.0;
  for (std::size_t i = 0; i < 4; ++i) k += std::norm(xa[i]) * std::norm(xb[i]);
  return k;
}

double simulated_bell_kernel(const NetworkSimulator& sim, const BellAmplitudes& a,
                             const BellAmplitudes& b) {
  return sim.output_up_probability(sim.run(a, b));
}

}  // namespace qsnn
