#include "qsnn/core/observables.hpp"

#include <algorithm>
#include <string>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

std::size_t checked_mask(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw Error(ErrorCode::kOutOfBounds, "qubit " + std::to_string(qubit) +
                                             " outside register of " +
                                             std::to_string(state.num_qubits()));
  }
  return qubit_mask(qubit, state.num_qubits());
}

}  // namespace

double expectation(const StateVector& state, Axis axis, int qubit) {
  const std::size_t bit = checked_mask(state, qubit);
  double value = 0.0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    const Complex a = state[b];
    switch (axis) {
      case Axis::kZ:
        value += ((b & bit) ? 1.0 : -1.0) * std::norm(a);
        break;
      case Axis::kX:
        value += (std::conj(state[b ^ bit]) * a).real();
        break;
      case Axis::kY: {
        // Y|down> = -i|up>, Y|up> = i|down>
        const Complex factor = (b & bit) ? Complex(0, 1) : Complex(0, -1);
        value += (std::conj(state[b ^ bit]) * factor * a).real();
        break;
      }
    }
  }
  return std::clamp(value, -1.0, 1.0);
}

MeasurementOutcome measure(const StateVector& state, int qubit) {
  const std::size_t bit = checked_mask(state, qubit);
  Vector down = state.amplitudes();
  Vector up = state.amplitudes();
  for (std::size_t b = 0; b < state.dim(); ++b) {
    ((b & bit) ? down : up)(static_cast<Eigen::Index>(b)) = 0.0;
  }
  MeasurementOutcome out;
  const double w_down = down.squaredNorm();
  const double w_up = up.squaredNorm();
  out.p_down = w_down / (w_down + w_up);
  out.p_up = w_up / (w_down + w_up);
  if (out.p_down >= MeasurementOutcome::kDegenerateThreshold) {
    out.post_down = StateVector::from_amplitudes(std::move(down), true);
  }
  if (out.p_up >= MeasurementOutcome::kDegenerateThreshold) {
    out.post_up = StateVector::from_amplitudes(std::move(up), true);
  }
  return out;
}

double excitation_probability(const StateVector& state, int qubit) {
  const std::size_t bit = checked_mask(state, qubit);
  double p = 0.0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    if (b & bit) p += std::norm(state[b]);
  }
  return p;
}

}  // namespace qsnn
