#pragma once

#include <cstddef>
#include <vector>

#include "qsnn/core/types.hpp"

namespace qsnn {

struct PauliFactor {
  int qubit;
  Axis axis;
};

/// coefficient * prod_j sigma^{axis_j}_{qubit_j}
struct StaticTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
};

enum class DriveForm {
  kCosineX,        // A cos(wt) sigma^x
  kRotatingPlus,   // (A/2)(e^{-iwt} sigma^+ + e^{+iwt} sigma^-)
  kRotatingMinus,  // (A/2)(e^{+iwt} sigma^+ + e^{-iwt} sigma^-)
  kStaticZ,        // A sigma^z
};

struct DriveTerm {
  double amplitude = 0.0;
  double angular_frequency = 0.0;
  int target_qubit = 0;
  DriveForm form = DriveForm::kCosineX;
};

/// Sum of static Pauli strings and single-qubit drives on an n-qubit register.
///
/// Terms are validated on insertion. The action on a state vector is applied
/// term by term without forming the dense matrix.
class TimeDependentHamiltonian {
 public:
  explicit TimeDependentHamiltonian(int num_qubits);

  TimeDependentHamiltonian& add(StaticTerm term);
  TimeDependentHamiltonian& add(DriveTerm drive);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dimension_of(num_qubits_); }
  const std::vector<StaticTerm>& static_terms() const { return static_terms_; }
  const std::vector<DriveTerm>& drive_terms() const { return drive_terms_; }

  /// True when no drive carries explicit time dependence.
  bool is_time_independent() const;

  /// Copy without any drive terms (static_z included).
  TimeDependentHamiltonian without_drives() const;

  /// out = H(t) in, for `batch` consecutive vectors of length dim().
  void apply(double t, const Complex* in, Complex* out, std::size_t batch = 1) const;

  Matrix dense_at(double t) const;

  /// max |H(t) - H(t)^dagger| over `samples` times spread over [0, period].
  double hermiticity_error(double period, int samples = 100) const;

  /// Sum of absolute coefficients; an upper bound on the spectral radius.
  double norm_bound() const;

 private:
  struct CompiledTerm {
    double coefficient;
    std::size_t flip_mask;
    std::size_t y_mask;
    std::size_t z_mask;
    Complex y_phase;  // (-i)^{#Y}
  };

  int num_qubits_;
  std::vector<StaticTerm> static_terms_;
  std::vector<DriveTerm> drive_terms_;
  std::vector<CompiledTerm> compiled_;
};

}  // namespace qsnn
