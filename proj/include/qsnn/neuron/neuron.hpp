#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qsnn/core/evolution.hpp"
#include "qsnn/core/gates.hpp"
#include "qsnn/core/hamiltonian.hpp"
#include "qsnn/core/state.hpp"
#include "qsnn/fidelity/fidelity.hpp"
#include "qsnn/neuron/bell.hpp"
#include "qsnn/neuron/params.hpp"

namespace qsnn {

enum class NeuronKind { kExcitation, kPhase, kFinalUpUp, kFinalDownDown };

using NeuronParams = std::variant<ExcNeuronParams, PhaseNeuronParams, FinalLayerParams>;

enum class GateStage { kBefore, kAfter };

struct CorrectionGate {
  GateStage stage = GateStage::kAfter;
  Gate gate;

  bool operator==(const CorrectionGate&) const = default;
};

struct NeuronSpec {
  NeuronKind kind = NeuronKind::kExcitation;
  NeuronParams params;
  std::array<int, 2> inputs{0, 1};
  int output = 2;
  /// Gates on the output qubit around the evolution.
  std::vector<CorrectionGate> corrections;

  std::array<int, 3> targets() const { return {inputs[0], inputs[1], output}; }
};

std::string to_string(NeuronKind kind);
NeuronKind parse_neuron_kind(const std::string& text);

/// Gates that complete the protocol. Without the output phase the neuron still
/// applies its Hadamards but leaves the flip phase for a later writer to cancel.
std::vector<CorrectionGate> standard_corrections(NeuronKind kind, const NeuronParams& params,
                                                 bool output_phase = true);

/// Builds a spec with the standard corrections. Throws on invalid parameters.
NeuronSpec make_neuron(NeuronKind kind, NeuronParams params, std::array<int, 2> inputs,
                       int output, bool output_phase = true);

/// Whether the spec's corrections include the trailing output phase gate.
bool has_output_phase(const NeuronSpec& spec);

/// Checks indices, parameter invariants and that the corrections match the kind.
void validate(const NeuronSpec& spec, int num_qubits);

TimeDependentHamiltonian build_exc_hamiltonian(const ExcNeuronParams& p, int num_qubits,
                                               const std::array<int, 3>& targets);
TimeDependentHamiltonian build_phase_hamiltonian(const PhaseNeuronParams& p, int num_qubits,
                                                 const std::array<int, 3>& targets);
TimeDependentHamiltonian build_final_hamiltonian(const FinalLayerParams& p, int num_qubits,
                                                 const std::array<int, 3>& targets);
TimeDependentHamiltonian build_hamiltonian(const NeuronSpec& spec, int num_qubits);

/// Evolution time tau of the spec.
double activation_time(const NeuronSpec& spec);

/// Pre-gates, evolution of the whole register, post-gates.
StateVector apply_neuron(const StateVector& state, const NeuronSpec& spec,
                         double tol = kDefaultTolerance);

/// 8x8 bare propagator on (input 1, input 2, output).
DenseOperator bare_unitary(const NeuronSpec& spec, double tol = kDefaultTolerance);

/// 8x8 protocol operator including the corrections.
DenseOperator neuron_unitary(const NeuronSpec& spec, double tol = kDefaultTolerance);

/// Target operator of the protocol, consistent with the spec's corrections.
DenseOperator ideal_unitary(const NeuronSpec& spec);
DenseOperator ideal_unitary(NeuronKind kind, const NeuronParams& params);

struct ProtocolState {
  std::string label;
  Vector vector;  // length 8
};

/// States the fidelity is averaged over: the inputs with the output |down>
/// plus the flipped images with the output |up>.
std::vector<ProtocolState> protocol_states(NeuronKind kind);
std::vector<Vector> protocol_subspace(NeuronKind kind);

FidelityReport neuron_fidelity(const NeuronSpec& spec, double tol = kDefaultTolerance);

struct Trajectory {
  std::vector<double> times;
  std::vector<double> output_x;
  std::vector<double> output_z;
  std::vector<double> input_fidelity;
};

struct TrajectoryOptions {
  std::size_t samples = 1000;
  double tol = kDefaultTolerance;
  /// Start from the state after the spec's pre-evolution gates (the phase
  /// neuron's input-side Hadamard) instead of |input>|down>.
  bool include_pre_gates = false;
};

Trajectory record_trajectory(const NeuronSpec& spec, BellLabel input,
                             const TrajectoryOptions& options = {});

struct SpectrumRow {
  double numeric = 0.0;
  double predicted = 0.0;
};

struct SpectrumBlock {
  std::string name;
  std::vector<SpectrumRow> rows;
  double max_deviation = 0.0;
  /// Allowed deviation: round-off for exact closed forms, the perturbative
  /// bound for approximate ones.
  double bound = 0.0;
};

struct SpectrumReport {
  std::vector<SpectrumBlock> blocks;
  double max_deviation() const;
  bool within_bounds() const;
};

SpectrumReport spectrum_report(const NeuronSpec& spec);

}  // namespace qsnn
