#include "qsnn/core/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

void check_qubit(int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw Error(ErrorCode::kOutOfBounds, "qubit " + std::to_string(qubit) +
                                             " outside register of " +
                                             std::to_string(num_qubits));
  }
}

}  // namespace

TimeDependentHamiltonian::TimeDependentHamiltonian(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw Error(ErrorCode::kInvalidArgument, "num_qubits must be in [1, 30]");
  }
}

TimeDependentHamiltonian& TimeDependentHamiltonian::add(StaticTerm term) {
  if (!std::isfinite(term.coefficient)) {
    throw Error(ErrorCode::kInvalidArgument, "static term coefficient is not finite");
  }
  CompiledTerm c{term.coefficient, 0, 0, 0, Complex(1, 0)};
  std::size_t seen = 0;
  for (const auto& f : term.factors) {
    check_qubit(f.qubit, num_qubits_);
    const std::size_t bit = qubit_mask(f.qubit, num_qubits_);
    if (seen & bit) {
      throw Error(ErrorCode::kDuplicateTarget,
                  "qubit " + std::to_string(f.qubit) + " appears twice in one term");
    }
    seen |= bit;
    switch (f.axis) {
      case Axis::kX: c.flip_mask |= bit; break;
      case Axis::kY:
        c.flip_mask |= bit;
        c.y_mask |= bit;
        c.y_phase *= Complex(0, -1);
        break;
      case Axis::kZ: c.z_mask |= bit; break;
    }
  }
  compiled_.push_back(c);
  static_terms_.push_back(std::move(term));
  return *this;
}

TimeDependentHamiltonian& TimeDependentHamiltonian::add(DriveTerm drive) {
  check_qubit(drive.target_qubit, num_qubits_);
  if (!std::isfinite(drive.amplitude) || !std::isfinite(drive.angular_frequency)) {
    throw Error(ErrorCode::kInvalidArgument, "drive parameters are not finite");
  }
  drive_terms_.push_back(drive);
  return *this;
}

bool TimeDependentHamiltonian::is_time_independent() const {
  for (const auto& d : drive_terms_) {
    if (d.form == DriveForm::kStaticZ) continue;
    if (d.form == DriveForm::kCosineX || d.angular_frequency != 0.0) return false;
  }
  return true;
}

TimeDependentHamiltonian TimeDependentHamiltonian::without_drives() const {
  TimeDependentHamiltonian h(num_qubits_);
  h.static_terms_ = static_terms_;
  h.compiled_ = compiled_;
  return h;
}

void TimeDependentHamiltonian::apply(double t, const Complex* in, Complex* out,
                                     std::size_t batch) const {
  const std::size_t dim = this->dim();
  for (std::size_t col = 0; col < batch; ++col) {
    const Complex* x = in + col * dim;
    Complex* y = out + col * dim;
    for (std::size_t b = 0; b < dim; ++b) y[b] = 0.0;

    // Y|down> = -i|up>, Y|up> = i|down>, Z|down> = -|down>:
    // phase(b) = (-i)^{#Y} (-1)^{#Y set in b} (-1)^{#Z clear in b}.
    for (const auto& term : compiled_) {
      const int nz = std::popcount(term.z_mask);
      for (std::size_t b = 0; b < dim; ++b) {
        const int parity = std::popcount(b & term.y_mask) + nz - std::popcount(b & term.z_mask);
        const double sign = (parity & 1) ? -1.0 : 1.0;
        y[b ^ term.flip_mask] += (term.coefficient * sign) * term.y_phase * x[b];
      }
    }

    for (const auto& d : drive_terms_) {
      const std::size_t bit = qubit_mask(d.target_qubit, num_qubits_);
      switch (d.form) {
        case DriveForm::kCosineX: {
          const double c = d.amplitude * std::cos(d.angular_frequency * t);
          for (std::size_t b = 0; b < dim; ++b) y[b ^ bit] += c * x[b];
          break;
        }
        case DriveForm::kRotatingPlus:
        case DriveForm::kRotatingMinus: {
          const double sgn = d.form == DriveForm::kRotatingPlus ? -1.0 : 1.0;
          const Complex raise = 0.5 * d.amplitude * std::polar(1.0, sgn * d.angular_frequency * t);
          const Complex lower = std::conj(raise);
          for (std::size_t b = 0; b < dim; ++b) {
            if (b & bit) {
              y[b & ~bit] += lower * x[b];
            } else {
              y[b | bit] += raise * x[b];
            }
          }
          break;
        }
        case DriveForm::kStaticZ:
          for (std::size_t b = 0; b < dim; ++b) y[b] += ((b & bit) ? d.amplitude : -d.amplitude) * x[b];
          break;
      }
    }
  }
}

Matrix TimeDependentHamiltonian::dense_at(double t) const {
  const auto d = static_cast<Eigen::Index>(dim());
  Matrix id = Matrix::Identity(d, d);
  Matrix h(d, d);
  apply(t, id.data(), h.data(), dim());
  return h;
}

double TimeDependentHamiltonian::hermiticity_error(double period, int samples) const {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = samples > 1 ? period * s / (samples - 1) : 0.0;
    const Matrix h = dense_at(t);
    worst = std::max(worst, (h - h.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double TimeDependentHamiltonian::norm_bound() const {
  double total = 0.0;
  for (const auto& t : static_terms_) total += std::abs(t.coefficient);
  for (const auto& d : drive_terms_) total += std::abs(d.amplitude);
  return total;
}

}  // namespace qsnn
