#include "qsnn/core/state.hpp"

#include <cmath>
#include <string>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

int qubits_for_length(Eigen::Index length) {
  if (length < 2 || (length & (length - 1)) != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "amplitude count " + std::to_string(length) + " is not 2^n with n >= 1");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < length) ++n;
  return n;
}

}  // namespace

Matrix2 pauli(Axis axis) {
  Matrix2 m;
  switch (axis) {
    case Axis::kX: m << 0, 1, 1, 0; break;
    case Axis::kY: m << 0, Complex(0, 1), Complex(0, -1), 0; break;
    case Axis::kZ: m << -1, 0, 0, 1; break;
  }
  return m;
}

Matrix2 sigma_plus() {
  Matrix2 m;
  m << 0, 0, 1, 0;
  return m;
}

StateVector::StateVector(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw Error(ErrorCode::kInvalidArgument, "num_qubits must be in [1, 30]");
  }
  const std::size_t dim = dimension_of(num_qubits);
  if (index >= dim) {
    throw Error(ErrorCode::kOutOfBounds, "basis index " + std::to_string(index) +
                                             " outside dimension " + std::to_string(dim));
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::from_amplitudes(Vector amplitudes, bool normalize) {
  const int n = qubits_for_length(amplitudes.size());
  const double norm = amplitudes.norm();
  if (normalize) {
    if (norm < 1e-300) throw Error(ErrorCode::kNormalization, "zero vector");
    amplitudes /= norm;
  } else if (std::abs(norm - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kNormalization,
                "state norm " + std::to_string(norm) + " differs from 1");
  }
  return StateVector(n, std::move(amplitudes));
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner product of different registers");
  }
  return amplitudes_.dot(other.amplitudes_);
}

StateVector StateVector::tensor(const StateVector& other) const {
  Vector v(amplitudes_.size() * other.amplitudes_.size());
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    v.segment(i * other.amplitudes_.size(), other.amplitudes_.size()) =
        amplitudes_(i) * other.amplitudes_;
  }
  return StateVector(num_qubits_ + other.num_qubits_, std::move(v));
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(a.inner(b));
}

DenseOperator::DenseOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "operator must be square and non-empty");
  }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DenseOperator(Matrix::Identity(d, d));
}

DenseOperator DenseOperator::unitary(Matrix entries) {
  DenseOperator op(std::move(entries));
  const double err = op.unitarity_error();
  if (!(err < kUnitarityTolerance)) {
    throw Error(ErrorCode::kNotUnitary, "unitarity error " + std::to_string(err));
  }
  return op;
}

double DenseOperator::unitarity_error() const {
  const Matrix gram = entries_.adjoint() * entries_;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
  if (rhs.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "operator product");
  return DenseOperator(entries_ * rhs.entries_);
}

StateVector DenseOperator::apply(const StateVector& state) const {
  if (state.dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator of dim " + std::to_string(dim()) + " applied to state of dim " +
                    std::to_string(state.dim()));
  }
  return StateVector::from_amplitudes(entries_ * state.amplitudes());
}

Matrix reduced_density_matrix(const StateVector& state, const std::vector<int>& keep) {
  const int n = state.num_qubits();
  std::size_t keep_mask = 0;
  for (int q : keep) {
    if (q < 0 || q >= n) throw Error(ErrorCode::kOutOfBounds, "qubit " + std::to_string(q));
    const std::size_t bit = qubit_mask(q, n);
    if (keep_mask & bit) throw Error(ErrorCode::kDuplicateTarget, "qubit " + std::to_string(q));
    keep_mask |= bit;
  }
  const auto k = static_cast<int>(keep.size());
  const auto kdim = static_cast<Eigen::Index>(dimension_of(k));
  // Group amplitudes by environment index: psi(env, kept).
  std::vector<std::size_t> env_of(state.dim());
  std::vector<std::size_t> kept_of(state.dim());
  const std::size_t env_mask = (state.dim() - 1) & ~keep_mask;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    std::size_t kept = 0;
    for (int j = 0; j < k; ++j) {
      if (b & qubit_mask(keep[static_cast<std::size_t>(j)], n)) kept |= qubit_mask(j, k);
    }
    kept_of[b] = kept;
    env_of[b] = b & env_mask;
  }
  Matrix psi = Matrix::Zero(kdim, static_cast<Eigen::Index>(state.dim() >> k));
  // Compress environment indices to a dense range.
  std::vector<Eigen::Index> env_slot(state.dim(), -1);
  Eigen::Index next = 0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    auto& slot = env_slot[env_of[b]];
    if (slot < 0) slot = next++;
    psi(static_cast<Eigen::Index>(kept_of[b]), slot) = state[b];
  }
  return psi * psi.adjoint();
}

}  // namespace qsnn
