#pragma once

#include <array>
#include <span>
#include <string>

#include "qsnn/core/state.hpp"
#include "qsnn/core/types.hpp"

namespace qsnn {

enum class GateKind { kHadamard, kPhase, kNotX, kZRotation };

struct Gate {
  GateKind kind = GateKind::kHadamard;
  double angle = 0.0;

  static Gate hadamard() { return {GateKind::kHadamard, 0.0}; }
  /// diag(1, e^{i phi})
  static Gate phase(double phi) { return {GateKind::kPhase, phi}; }
  static Gate not_x() { return {GateKind::kNotX, 0.0}; }
  /// exp(-i theta sigma^z / 2)
  static Gate z_rotation(double theta) { return {GateKind::kZRotation, theta}; }

  /// Exact 2x2 matrix in the (|down>, |up>) basis. The Hadamard is
  /// [[1, 1], [1, -1]] / sqrt(2).
  Matrix2 matrix() const;

  std::string name() const;

  bool operator==(const Gate&) const = default;
};

enum class GateMode {
  kExact,
  /// Realize the gate by evolving a single-qubit Hamiltonian of strength B = 1.
  kDynamics,
};

StateVector apply_gate(const StateVector& state, const Gate& gate, int target,
                       GateMode mode = GateMode::kExact);

/// Applies a 2^k x 2^k operator to the listed qubits of a raw amplitude vector in place.
/// targets[0] is the most significant qubit of the operator's index.
void apply_local(Vector& amplitudes, int num_qubits, const Matrix& op,
                 std::span<const int> targets);

/// Embeds an 8x8 operator on three distinct qubits of an n-qubit register.
DenseOperator tensor_embed(const DenseOperator& op, const std::array<int, 3>& targets,
                           int num_qubits);

/// Embeds a single-qubit operator.
Matrix embed_single(const Matrix2& op, int target, int num_qubits);

}  // namespace qsnn
