#pragma once

#include <cstddef>
#include <vector>

#include "qsnn/core/types.hpp"

namespace qsnn {

/// Normalized pure state of an n-qubit register.
///
/// Amplitudes are indexed with qubit 0 as the most significant bit.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// Computational basis state |index>.
  static StateVector basis(int num_qubits, std::size_t index);

  /// Throws kNormalization when the norm is off by more than kNormTolerance
  /// and normalize is false.
  static StateVector from_amplitudes(Vector amplitudes, bool normalize = false);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

  double norm() const { return amplitudes_.norm(); }

  /// <this|other>
  Complex inner(const StateVector& other) const;

  /// this (x) other, with this register on the most significant qubits.
  StateVector tensor(const StateVector& other) const;

 private:
  StateVector(int num_qubits, Vector amplitudes);

  int num_qubits_;
  Vector amplitudes_;
};

/// |<a|b>|^2
double state_fidelity(const StateVector& a, const StateVector& b);

class DenseOperator {
 public:
  static constexpr double kUnitarityTolerance = 1e-8;

  explicit DenseOperator(Matrix entries);

  static DenseOperator identity(std::size_t dim);

  /// Constructs and enforces the unitarity check.
  static DenseOperator unitary(Matrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// max |(U^dagger U - I)_ij|
  double unitarity_error() const;
  bool is_unitary(double tol = kUnitarityTolerance) const { return unitarity_error() < tol; }

  DenseOperator adjoint() const { return DenseOperator(entries_.adjoint()); }
  DenseOperator operator*(const DenseOperator& rhs) const;

  StateVector apply(const StateVector& state) const;

 private:
  Matrix entries_;
};

/// Reduced density matrix of the listed qubits, in the order given.
Matrix reduced_density_matrix(const StateVector& state, const std::vector<int>& keep);

}  // namespace qsnn
