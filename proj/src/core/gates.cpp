#include "qsnn/core/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsnn/core/error.hpp"
#include "qsnn/core/evolution.hpp"
#include "qsnn/core/hamiltonian.hpp"

namespace qsnn {

namespace {

void check_targets(std::span<const int> targets, int num_qubits) {
  std::size_t seen = 0;
  for (int q : targets) {
    if (q < 0 || q >= num_qubits) {
      throw Error(ErrorCode::kOutOfBounds, "qubit " + std::to_string(q) +
                                               " outside register of " +
                                               std::to_string(num_qubits));
    }
    const std::size_t bit = qubit_mask(q, num_qubits);
    if (seen & bit) throw Error(ErrorCode::kDuplicateTarget, "qubit " + std::to_string(q));
    seen |= bit;
  }
}

// Full-register offset of every local index, plus the mask of all target bits.
std::vector<std::size_t> local_offsets(std::span<const int> targets, int num_qubits,
                                       std::size_t* target_mask) {
  const int k = static_cast<int>(targets.size());
  std::vector<std::size_t> offsets(dimension_of(k), 0);
  *target_mask = 0;
  for (int j = 0; j < k; ++j) *target_mask |= qubit_mask(targets[j], num_qubits);
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      if (i & qubit_mask(j, k)) offsets[i] |= qubit_mask(targets[j], num_qubits);
    }
  }
  return offsets;
}

TimeDependentHamiltonian single_qubit_field(int num_qubits, int target, Axis axis,
                                            double strength) {
  TimeDependentHamiltonian h(num_qubits);
  h.add(StaticTerm{strength, {{target, axis}}});
  return h;
}

StateVector apply_dynamics(const StateVector& state, const Gate& gate, int target) {
  constexpr double kB = 1.0;
  constexpr double kTol = 1e-12;
  const int n = state.num_qubits();
  switch (gate.kind) {
    case GateKind::kHadamard: {
      // sqrt(2) B (sigma^x - sigma^z) for pi/(4B) gives -i times the Hadamard.
      TimeDependentHamiltonian h(n);
      h.add(StaticTerm{std::numbers::sqrt2 * kB, {{target, Axis::kX}}});
      h.add(StaticTerm{-std::numbers::sqrt2 * kB, {{target, Axis::kZ}}});
      return evolve(state, h, std::numbers::pi / (4 * kB), kTol);
    }
    case GateKind::kPhase: {
      const double sign = gate.angle >= 0 ? -1.0 : 1.0;
      return evolve(state, single_qubit_field(n, target, Axis::kZ, sign * kB),
                    std::abs(gate.angle) / (2 * kB), kTol);
    }
    case GateKind::kZRotation: {
      const double sign = gate.angle >= 0 ? 1.0 : -1.0;
      return evolve(state, single_qubit_field(n, target, Axis::kZ, sign * kB),
                    std::abs(gate.angle) / (2 * kB), kTol);
    }
    case GateKind::kNotX:
      return evolve(state, single_qubit_field(n, target, Axis::kX, kB),
                    std::numbers::pi / (2 * kB), kTol);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gate");
}

}  // namespace

Matrix2 Gate::matrix() const {
  Matrix2 m;
  switch (kind) {
    case GateKind::kHadamard:
      m << 1, 1, 1, -1;
      return m / std::numbers::sqrt2;
    case GateKind::kPhase:
      m << 1, 0, 0, std::polar(1.0, angle);
      return m;
    case GateKind::kNotX:
      return pauli(Axis::kX);
    case GateKind::kZRotation:
      m << std::polar(1.0, angle / 2), 0, 0, std::polar(1.0, -angle / 2);
      return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gate");
}

std::string Gate::name() const {
  switch (kind) {
    case GateKind::kHadamard: return "hadamard";
    case GateKind::kPhase: return "phase";
    case GateKind::kNotX: return "not_x";
    case GateKind::kZRotation: return "z_rotation";
  }
  return "unknown";
}

StateVector apply_gate(const StateVector& state, const Gate& gate, int target, GateMode mode) {
  const int targets[] = {target};
  check_targets(targets, state.num_qubits());
  if (mode == GateMode::kDynamics) return apply_dynamics(state, gate, target);
  Vector amps = state.amplitudes();
  apply_local(amps, state.num_qubits(), gate.matrix(), targets);
  return StateVector::from_amplitudes(std::move(amps));
}

void apply_local(Vector& amplitudes, int num_qubits, const Matrix& op,
                 std::span<const int> targets) {
  check_targets(targets, num_qubits);
  const std::size_t dim = dimension_of(num_qubits);
  if (static_cast<std::size_t>(amplitudes.size()) != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude vector does not match register");
  }
  const auto local_dim = static_cast<Eigen::Index>(dimension_of(static_cast<int>(targets.size())));
  if (op.rows() != local_dim || op.cols() != local_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "local operator does not match target count");
  }
  std::size_t target_mask = 0;
  const auto offsets = local_offsets(targets, num_qubits, &target_mask);
  Vector gathered(local_dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index i = 0; i < local_dim; ++i) {
      gathered(i) = amplitudes(static_cast<Eigen::Index>(base | offsets[i]));
    }
    const Vector mapped = op * gathered;
    for (Eigen::Index i = 0; i < local_dim; ++i) {
      amplitudes(static_cast<Eigen::Index>(base | offsets[i])) = mapped(i);
    }
  }
}

DenseOperator tensor_embed(const DenseOperator& op, const std::array<int, 3>& targets,
                           int num_qubits) {
  if (op.dim() != 8) throw Error(ErrorCode::kDimensionMismatch, "tensor_embed expects dim 8");
  if (num_qubits < 3) throw Error(ErrorCode::kInvalidArgument, "register needs >= 3 qubits");
  check_targets(targets, num_qubits);
  std::size_t target_mask = 0;
  const auto offsets = local_offsets(targets, num_qubits, &target_mask);
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
  Matrix full = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto c = static_cast<std::size_t>(col);
    const std::size_t base = c & ~target_mask;
    Eigen::Index local_col = 0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if ((c & target_mask) == offsets[i]) local_col = static_cast<Eigen::Index>(i);
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      full(static_cast<Eigen::Index>(base | offsets[i]), col) =
          op.matrix()(static_cast<Eigen::Index>(i), local_col);
    }
  }
  return DenseOperator(std::move(full));
}

Matrix embed_single(const Matrix2& op, int target, int num_qubits) {
  const int targets[] = {target};
  check_targets(targets, num_qubits);
  const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
  Matrix full = Matrix::Identity(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Vector col = full.col(c);
    apply_local(col, num_qubits, op, targets);
    full.col(c) = col;
  }
  return full;
}

}  // namespace qsnn
