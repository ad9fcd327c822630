#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsnn/core/state.hpp"
#include "qsnn/neuron/bell.hpp"
#include "qsnn/neuron/neuron.hpp"

namespace qsnn {

enum class RunMode {
  kEmbeddedUnitary,  // each neuron's 8x8 protocol operator, computed once
  kFullDynamics,     // evolve the whole register per activation
  kIdeal,            // each neuron replaced by its target operator
};

std::string to_string(RunMode mode);
RunMode parse_run_mode(const std::string& text);

struct NetworkSpec {
  int num_qubits = 0;
  std::vector<NeuronSpec> schedule;
  /// First Bell pair on [0], [1]; second on [2], [3].
  std::array<int, 4> input_qubits{0, 1, 2, 3};
  int output_qubit = 0;
  RunMode run_mode = RunMode::kEmbeddedUnitary;
};

struct NetworkParams {
  ExcNeuronParams exc;
  PhaseNeuronParams phase;
  FinalLayerParams final_layer;
};

enum class TemplateKind { kFull, kReduced };

std::string to_string(TemplateKind kind);
TemplateKind parse_template_kind(const std::string& text);

/// Full: 11 qubits, 7 neurons ending in detect_upup. Reduced: 7 qubits,
/// 5 neurons sharing the middle targets and ending in detect_downdown.
NetworkSpec make_template(TemplateKind kind, const NetworkParams& params = {});

/// Rebuilds every entry's corrections so that only the last writer of each
/// target applies the output phase gate.
void assign_output_phases(std::vector<NeuronSpec>& schedule);

struct ValidationIssue {
  int entry = -1;  // schedule index, -1 for register-level issues
  std::string message;
};

/// Empty when the spec is consistent.
std::vector<ValidationIssue> validate(const NetworkSpec& spec);

/// Amplitudes over (Psi+, Psi-, Phi+, Phi-).
struct BellAmplitudes {
  Complex psi_plus = 0.0;
  Complex psi_minus = 0.0;
  Complex phi_plus = 0.0;
  Complex phi_minus = 0.0;

  static BellAmplitudes pure(BellLabel label);
  static BellAmplitudes from_array(const std::array<Complex, 4>& a);
  std::array<Complex, 4> as_array() const;
  double norm_squared() const;
  /// Two-qubit state vector; throws kNormalization when not normalized.
  Vector pair_vector() const;
};

/// Runs a validated spec; unitaries for embedded and ideal modes are cached.
class NetworkSimulator {
 public:
  explicit NetworkSimulator(NetworkSpec spec, double tol = kDefaultTolerance);

  const NetworkSpec& spec() const { return spec_; }

  StateVector prepare(const BellAmplitudes& first, const BellAmplitudes& second) const;
  /// Places a 4-qubit state on the input qubits; all other qubits start |down>.
  StateVector prepare(const StateVector& input_register) const;

  StateVector run(const StateVector& prepared) const;
  StateVector run(const BellAmplitudes& first, const BellAmplitudes& second) const;

  double output_up_probability(const StateVector& final_state) const;

 private:
  NetworkSpec spec_;
  double tol_;
  std::vector<Matrix> local_ops_;
};

struct TruthTableRow {
  BellLabel first;
  BellLabel second;
  double p_up = 0.0;
};

/// All 16 ordered pure Bell-pair inputs; rows are independent and spread over `jobs` threads.
std::vector<TruthTableRow> truth_table(const NetworkSimulator& sim, unsigned jobs = 1);

enum class Outcome { kDown, kUp };

std::string to_string(Outcome outcome);

struct NamedState {
  std::string name;
  Vector vector;  // 16 amplitudes over the input register
};

/// (|Phi- Phi-> + |Psi+ Psi+>)/sqrt2 for identical pairs and
/// (|Psi+ Phi-> + |Phi- Psi+>)/sqrt2 for different ones.
std::vector<NamedState> superposition_branches();

struct BranchOverlap {
  std::string name;
  double fidelity = 0.0;        // <b| rho |b>
  double support_weight = 0.0;  // weight of rho on the span of b's Bell-pair components
};

struct BackActionReport {
  Outcome outcome = Outcome::kUp;
  double probability = 0.0;
  Matrix input_density;  // 16x16 reduced state of the input register
  std::vector<BranchOverlap> overlaps;
};

/// Projects the output qubit. Throws kDegenerateOutcome below 1e-14 probability.
BackActionReport back_action(const StateVector& final_state, const NetworkSpec& spec,
                             Outcome outcome,
                             const std::vector<NamedState>& branches = superposition_branches());

/// Reduced density matrix of the four input qubits.
Matrix input_register_density(const StateVector& state, const NetworkSpec& spec);

/// sum_i |a_i|^2 |b_i|^2
double bell_kernel(const BellAmplitudes& a, const BellAmplitudes& b);

/// Output excitation probability of a network run on (a, b).
double simulated_bell_kernel(const NetworkSimulator& sim, const BellAmplitudes& a,
                             const BellAmplitudes& b);

}  // namespace qsnn
