#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qsnn {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

enum class Axis { kX, kY, kZ };

/// Pauli matrix in the spin basis (|down> = |0>, |up> = |1>), so sigma_z = diag(-1, +1).
Matrix2 pauli(Axis axis);

/// sigma^+ = |up><down|.
Matrix2 sigma_plus();

constexpr std::size_t dimension_of(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

/// Bit mask of a qubit inside a basis index; qubit 0 is the most significant bit.
constexpr std::size_t qubit_mask(int qubit, int num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

}  // namespace qsnn
