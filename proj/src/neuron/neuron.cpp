#include "qsnn/neuron/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsnn/core/error.hpp"
#include "qsnn/core/observables.hpp"

namespace qsnn {

namespace {

constexpr int kLocalQubits = 3;
constexpr std::array<int, 3> kLocalTargets = {0, 1, 2};

template <class P>
const P& params_as(const NeuronSpec& spec) {
  const P* p = std::get_if<P>(&spec.params);
  if (!p) {
    throw Error(ErrorCode::kInvalidParams,
                "parameters do not match neuron kind " + to_string(spec.kind));
  }
  return *p;
}

template <class P>
const P& params_as(NeuronKind kind, const NeuronParams& params) {
  const P* p = std::get_if<P>(&params);
  if (!p) throw Error(ErrorCode::kInvalidParams, "parameters do not match neuron kind " + to_string(kind));
  return *p;
}

bool expects_params(NeuronKind kind, const NeuronParams& params) {
  switch (kind) {
    case NeuronKind::kExcitation: return std::holds_alternative<ExcNeuronParams>(params);
    case NeuronKind::kPhase: return std::holds_alternative<PhaseNeuronParams>(params);
    case NeuronKind::kFinalUpUp:
    case NeuronKind::kFinalDownDown: {
      const auto* f = std::get_if<FinalLayerParams>(&params);
      if (!f) return false;
      return (kind == NeuronKind::kFinalUpUp) == (f->variant == FinalVariant::kDetectUpUp);
    }
  }
  return false;
}

void validate_params(NeuronKind kind, const NeuronParams& params) {
  if (!expects_params(kind, params)) {
    throw Error(ErrorCode::kInvalidParams,
                "parameters do not match neuron kind " + to_string(kind));
  }
  std::visit([](const auto& p) { validate(p); }, params);
}

/// Phase of the flipped states relative to the unflipped ones after the bare evolution.
Complex flip_phase(NeuronKind kind, const NeuronParams& params) {
  switch (kind) {
    case NeuronKind::kExcitation: return params_as<ExcNeuronParams>(kind, params).flip_phase();
    case NeuronKind::kPhase: return params_as<PhaseNeuronParams>(kind, params).flip_phase();
    default: return params_as<FinalLayerParams>(kind, params).flip_phase();
  }
}

void add_heisenberg(TimeDependentHamiltonian& h, double coefficient, double gamma, int a, int b) {
  h.add(StaticTerm{coefficient, {{a, Axis::kX}, {b, Axis::kX}}});
  h.add(StaticTerm{coefficient, {{a, Axis::kY}, {b, Axis::kY}}});
  h.add(StaticTerm{coefficient * gamma, {{a, Axis::kZ}, {b, Axis::kZ}}});
}

Vector pair_basis(int index) {
  Vector v = Vector::Zero(4);
  v(index) = 1.0;
  return v;
}

Vector local_state(const Vector& pair, bool out_up) { return kron(pair, spin_vector(out_up)); }

Matrix2 gate_matrix(const CorrectionGate& g) { return g.gate.matrix(); }

std::vector<double> sorted_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
  std::vector<double> v(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

SpectrumBlock compare(std::string name, const Matrix& h, std::vector<double> predicted,
                      double bound) {
  SpectrumBlock block;
  block.name = std::move(name);
  block.bound = bound;
  const auto numeric = sorted_eigenvalues(h);
  std::sort(predicted.begin(), predicted.end());
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    block.rows.push_back({numeric[i], predicted[i]});
    block.max_deviation = std::max(block.max_deviation, std::abs(numeric[i] - predicted[i]));
  }
  return block;
}

std::vector<double> exchange_spectrum(double beta, double J, double gamma) {
  const double root = std::sqrt(J * J + beta * beta);
  const double half = gamma * J / 2;
  return {root - half, root - half, -root - half, -root - half,
          beta + half, beta + half, -beta + half, -beta + half};
}

constexpr double kClosedFormBound = 1e-10;

}  // namespace

std::string to_string(NeuronKind kind) {
  switch (kind) {
    case NeuronKind::kExcitation: return "excitation";
    case NeuronKind::kPhase: return "phase";
    case NeuronKind::kFinalUpUp: return "final_upup";
    case NeuronKind::kFinalDownDown: return "final_downdown";
  }
  return "unknown";
}

NeuronKind parse_neuron_kind(const std::string& text) {
  if (text == "excitation" || text == "exc") return NeuronKind::kExcitation;
  if (text == "phase") return NeuronKind::kPhase;
  if (text == "final_upup") return NeuronKind::kFinalUpUp;
  if (text == "final_downdown") return NeuronKind::kFinalDownDown;
  throw Error(ErrorCode::kInvalidArgument, "unknown neuron kind '" + text + "'");
}

std::vector<CorrectionGate> standard_corrections(NeuronKind kind, const NeuronParams& params,
                                                 bool output_phase) {
  std::vector<CorrectionGate> gates;
  if (kind == NeuronKind::kPhase) {
    gates.push_back({GateStage::kBefore, Gate::hadamard()});
    gates.push_back({GateStage::kAfter, Gate::hadamard()});
  }
  if (output_phase) {
    gates.push_back({GateStage::kAfter, Gate::phase(-std::arg(flip_phase(kind, params)))});
  }
  return gates;
}

NeuronSpec make_neuron(NeuronKind kind, NeuronParams params, std::array<int, 2> inputs,
                       int output, bool output_phase) {
  validate_params(kind, params);
  NeuronSpec spec;
  spec.kind = kind;
  spec.corrections = standard_corrections(kind, params, output_phase);
  spec.params = std::move(params);
  spec.inputs = inputs;
  spec.output = output;
  return spec;
}

bool has_output_phase(const NeuronSpec& spec) {
  return std::any_of(spec.corrections.begin(), spec.corrections.end(), [](const CorrectionGate& g) {
    return g.stage == GateStage::kAfter && g.gate.kind == GateKind::kPhase;
  });
}

void validate(const NeuronSpec& spec, int num_qubits) {
  const auto t = spec.targets();
  for (int q : t) {
    if (q < 0 || q >= num_qubits) {
      throw Error(ErrorCode::kOutOfBounds, to_string(spec.kind) + " neuron index " +
                                               std::to_string(q) + " outside register of " +
                                               std::to_string(num_qubits));
    }
  }
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
    throw Error(ErrorCode::kDuplicateTarget, to_string(spec.kind) + " neuron indices must be distinct");
  }
  validate_params(spec.kind, spec.params);
  if (spec.corrections != standard_corrections(spec.kind, spec.params, true) &&
      spec.corrections != standard_corrections(spec.kind, spec.params, false)) {
    throw Error(ErrorCode::kInvalidParams,
                "correction gates are inconsistent with " + to_string(spec.kind) + " neuron");
  }
}

TimeDependentHamiltonian build_exc_hamiltonian(const ExcNeuronParams& p, int num_qubits,
                                               const std::array<int, 3>& targets) {
  validate(p);
  TimeDependentHamiltonian h(num_qubits);
  add_heisenberg(h, p.J() / 2, p.gamma, targets[0], targets[1]);
  h.add(StaticTerm{p.beta(), {{targets[1], Axis::kZ}, {targets[2], Axis::kZ}}});
  h.add(DriveTerm{p.drive_amplitude, p.drive_frequency(), targets[2], DriveForm::kCosineX});
  return h;
}

TimeDependentHamiltonian build_phase_hamiltonian(const PhaseNeuronParams& p, int num_qubits,
                                                 const std::array<int, 3>& targets) {
  validate(p);
  TimeDependentHamiltonian h(num_qubits);
  add_heisenberg(h, p.exchange_coefficient(), p.gamma, targets[0], targets[1]);
  h.add(StaticTerm{p.delta(), {{targets[1], Axis::kX}, {targets[2], Axis::kX}}});
  h.add(DriveTerm{p.drive_amplitude, 0.0, targets[2], DriveForm::kStaticZ});
  return h;
}

TimeDependentHamiltonian build_final_hamiltonian(const FinalLayerParams& p, int num_qubits,
                                                 const std::array<int, 3>& targets) {
  validate(p);
  const FinalBeta sol = p.solution();
  const double beta = p.coupling_beta();
  const bool upup = p.variant == FinalVariant::kDetectUpUp;
  TimeDependentHamiltonian h(num_qubits);
  add_heisenberg(h, sol.J / 2, p.gamma, targets[0], targets[1]);
  h.add(StaticTerm{beta, {{targets[1], Axis::kZ}, {targets[2], Axis::kZ}}});
  if (p.drive_mode == FinalDriveMode::kRotating) {
    h.add(DriveTerm{p.drive_amplitude, 2 * beta, targets[2],
                    upup ? DriveForm::kRotatingPlus : DriveForm::kRotatingMinus});
  } else {
    h.add(StaticTerm{p.omega / 2, {{targets[2], Axis::kZ}}});
    const double w = upup ? p.omega + 2 * beta : p.omega - 2 * beta;
    h.add(DriveTerm{p.drive_amplitude, w, targets[2], DriveForm::kCosineX});
  }
  return h;
}

TimeDependentHamiltonian build_hamiltonian(const NeuronSpec& spec, int num_qubits) {
  const auto t = spec.targets();
  switch (spec.kind) {
    case NeuronKind::kExcitation:
      return build_exc_hamiltonian(params_as<ExcNeuronParams>(spec), num_qubits, t);
    case NeuronKind::kPhase:
      return build_phase_hamiltonian(params_as<PhaseNeuronParams>(spec), num_qubits, t);
    case NeuronKind::kFinalUpUp:
    case NeuronKind::kFinalDownDown:
      return build_final_hamiltonian(params_as<FinalLayerParams>(spec), num_qubits, t);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown neuron kind");
}

double activation_time(const NeuronSpec& spec) {
  return std::visit([](const auto& p) { return p.tau(); }, spec.params);
}

StateVector apply_neuron(const StateVector& state, const NeuronSpec& spec, double tol) {
  validate(spec, state.num_qubits());
  StateVector psi = state;
  for (const auto& g : spec.corrections) {
    if (g.stage == GateStage::kBefore) psi = apply_gate(psi, g.gate, spec.output);
  }
  psi = evolve(psi, build_hamiltonian(spec, state.num_qubits()), activation_time(spec), tol);
  for (const auto& g : spec.corrections) {
    if (g.stage == GateStage::kAfter) psi = apply_gate(psi, g.gate, spec.output);
  }
  return psi;
}

DenseOperator bare_unitary(const NeuronSpec& spec, double tol) {
  NeuronSpec local = spec;
  local.inputs = {0, 1};
  local.output = 2;
  return propagator(build_hamiltonian(local, kLocalQubits), activation_time(spec), tol);
}

DenseOperator neuron_unitary(const NeuronSpec& spec, double tol) {
  Matrix u = bare_unitary(spec, tol).matrix();
  for (const auto& g : spec.corrections) {
    const Matrix m = embed_single(gate_matrix(g), 2, kLocalQubits);
    u = g.stage == GateStage::kBefore ? Matrix(u * m) : Matrix(m * u);
  }
  return DenseOperator::unitary(std::move(u));
}

DenseOperator ideal_unitary(NeuronKind kind, const NeuronParams& params) {
  NeuronSpec spec;
  spec.kind = kind;
  spec.params = params;
  spec.corrections = standard_corrections(kind, params, true);
  return ideal_unitary(spec);
}

DenseOperator ideal_unitary(const NeuronSpec& spec) {
  validate_params(spec.kind, spec.params);
  const Complex forward = flip_phase(spec.kind, spec.params);
  const Complex correction = has_output_phase(spec) ? 1.0 / forward : Complex(1.0);
  Matrix u = Matrix::Zero(8, 8);
  auto map = [&u](const Vector& from, const Vector& to) { u += to * from.adjoint(); };

  switch (spec.kind) {
    case NeuronKind::kExcitation:
    case NeuronKind::kPhase: {
      for (BellLabel b : kBellLabels) {
        // Excitation neuron flips on even excitation parity, phase neuron on a minus sign.
        const bool flips = spec.kind == NeuronKind::kExcitation
                               ? (b == BellLabel::kPhiPlus || b == BellLabel::kPhiMinus)
                               : (b == BellLabel::kPhiMinus || b == BellLabel::kPsiMinus);
        const Vector pair = bell_vector(b);
        if (flips) {
          map(local_state(pair, false), forward * correction * local_state(pair, true));
          map(local_state(pair, true), forward * local_state(pair, false));
        } else {
          map(local_state(pair, false), local_state(pair, false));
          map(local_state(pair, true), correction * local_state(pair, true));
        }
      }
      break;
    }
    case NeuronKind::kFinalUpUp:
    case NeuronKind::kFinalDownDown: {
      const auto& p = params_as<FinalLayerParams>(spec);
      const int detected = spec.kind == NeuronKind::kFinalUpUp ? 3 : 0;
      for (int pair_index = 0; pair_index < 4; ++pair_index) {
        const Vector pair = pair_basis(pair_index);
        if (pair_index == detected) {
          map(local_state(pair, false), forward * correction * local_state(pair, true));
          map(local_state(pair, true), p.return_phase() * local_state(pair, false));
        } else {
          map(local_state(pair, false), local_state(pair, false));
          map(local_state(pair, true), correction * local_state(pair, true));
        }
      }
      break;
    }
  }
  return DenseOperator::unitary(std::move(u));
}

std::vector<ProtocolState> protocol_states(NeuronKind kind) {
  std::vector<ProtocolState> out;
  auto bell = [&out](BellLabel b, bool up) {
    out.push_back({std::string(to_string(b)) + (up ? "|1>" : "|0>"), local_state(bell_vector(b), up)});
  };
  switch (kind) {
    case NeuronKind::kExcitation:
      bell(BellLabel::kPsiPlus, false);
      bell(BellLabel::kPsiMinus, false);
      bell(BellLabel::kPhiPlus, false);
      bell(BellLabel::kPhiMinus, false);
      bell(BellLabel::kPhiPlus, true);
      bell(BellLabel::kPhiMinus, true);
      break;
    case NeuronKind::kPhase:
      bell(BellLabel::kPsiPlus, false);
      bell(BellLabel::kPhiPlus, false);
      bell(BellLabel::kPsiMinus, false);
      bell(BellLabel::kPhiMinus, false);
      bell(BellLabel::kPsiMinus, true);
      bell(BellLabel::kPhiMinus, true);
      break;
    case NeuronKind::kFinalUpUp:
    case NeuronKind::kFinalDownDown: {
      static const char* names[4] = {"|00>", "|01>", "|10>", "|11>"};
      for (int i = 0; i < 4; ++i) out.push_back({std::string(names[i]) + "|0>", local_state(pair_basis(i), false)});
      const int detected = kind == NeuronKind::kFinalUpUp ? 3 : 0;
      out.push_back({std::string(names[detected]) + "|1>", local_state(pair_basis(detected), true)});
      break;
    }
  }
  return out;
}

std::vector<Vector> protocol_subspace(NeuronKind kind) {
  std::vector<Vector> out;
  for (auto& s : protocol_states(kind)) out.push_back(std::move(s.vector));
  return out;
}

FidelityReport neuron_fidelity(const NeuronSpec& spec, double tol) {
  return average_fidelity(neuron_unitary(spec, tol), ideal_unitary(spec), protocol_subspace(spec.kind));
}

Trajectory record_trajectory(const NeuronSpec& spec, BellLabel input,
                             const TrajectoryOptions& options) {
  if (options.samples < 2) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 2");
  NeuronSpec local = spec;
  local.inputs = {0, 1};
  local.output = 2;
  const TimeDependentHamiltonian h = build_hamiltonian(local, kLocalQubits);
  const double tau = activation_time(spec);
  const Vector pair = bell_vector(input);

  StateVector psi = StateVector::from_amplitudes(local_state(pair, false));
  if (options.include_pre_gates) {
    for (const auto& g : spec.corrections) {
      if (g.stage == GateStage::kBefore) psi = apply_gate(psi, g.gate, 2);
    }
  }

  Trajectory traj;
  const std::size_t n = options.samples;
  double t_prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = tau * static_cast<double>(i) / static_cast<double>(n - 1);
    if (i > 0) psi = evolve_interval(psi, h, t_prev, t, options.tol);
    t_prev = t;
    const Matrix rho = reduced_density_matrix(psi, {0, 1});
    traj.times.push_back(t);
    traj.output_x.push_back(expectation(psi, Axis::kX, 2));
    traj.output_z.push_back(expectation(psi, Axis::kZ, 2));
    traj.input_fidelity.push_back(std::clamp(pair.dot(rho * pair).real(), 0.0, 1.0));
  }
  return traj;
}

double SpectrumReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& b : blocks) worst = std::max(worst, b.max_deviation);
  return worst;
}

bool SpectrumReport::within_bounds() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const SpectrumBlock& b) { return b.max_deviation <= b.bound; });
}

SpectrumReport spectrum_report(const NeuronSpec& spec) {
  NeuronSpec local = spec;
  local.inputs = {0, 1};
  local.output = 2;
  const Matrix h = build_hamiltonian(local, kLocalQubits).without_drives().dense_at(0.0);

  SpectrumReport report;
  switch (spec.kind) {
    case NeuronKind::kExcitation: {
      const auto& p = params_as<ExcNeuronParams>(spec);
      report.blocks.push_back(compare("full", h, exchange_spectrum(p.beta(), p.J(), p.gamma), kClosedFormBound));
      break;
    }
    case NeuronKind::kFinalUpUp:
    case NeuronKind::kFinalDownDown: {
      const auto& p = params_as<FinalLayerParams>(spec);
      report.blocks.push_back(compare("full", h, exchange_spectrum(p.coupling_beta(), p.solution().J, p.gamma),
                                      kClosedFormBound));
      break;
    }
    case NeuronKind::kPhase: {
      const auto& p = params_as<PhaseNeuronParams>(spec);
      const double g = p.exchange_coefficient();
      const double d = p.delta();
      const double s = 1.0 / std::numbers::sqrt2;
      Vector plus(2), minus(2);
      plus << s, s;
      minus << s, -s;
      auto block_matrix = [&h, &plus, &minus](BellLabel a, BellLabel b) {
        Matrix basis(8, 4);
        basis.col(0) = kron(bell_vector(a), plus);
        basis.col(1) = kron(bell_vector(a), minus);
        basis.col(2) = kron(bell_vector(b), plus);
        basis.col(3) = kron(bell_vector(b), minus);
        return Matrix(basis.adjoint() * h * basis);
      };
      // Phi+ (energy g gamma) and Psi+ (g (2 - gamma)) are coupled by +-delta.
      const double pos = std::sqrt(g * g * (p.gamma - 1) * (p.gamma - 1) + d * d);
      report.blocks.push_back(compare("positive", block_matrix(BellLabel::kPhiPlus, BellLabel::kPsiPlus),
                                      {g + pos, g + pos, g - pos, g - pos}, kClosedFormBound));
      // Phi- (g gamma) and Psi- (-g (2 + gamma)) are split by 2g(1 + gamma) >> delta.
      const double shift_bound = d * d / (g * (1 + p.gamma));
      report.blocks.push_back(compare("negative", block_matrix(BellLabel::kPhiMinus, BellLabel::kPsiMinus),
                                      {g * p.gamma, g * p.gamma, -g * (2 + p.gamma), -g * (2 + p.gamma)},
                                      shift_bound));
      break;
    }
  }
  return report;
}

}  // namespace qsnn
