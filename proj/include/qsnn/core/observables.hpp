#pragma once

#include <optional>

#include "qsnn/core/state.hpp"
#include "qsnn/core/types.hpp"

namespace qsnn {

/// <psi| sigma^axis_qubit |psi>
double expectation(const StateVector& state, Axis axis, int qubit);

struct MeasurementOutcome {
  static constexpr double kDegenerateThreshold = 1e-14;

  double p_down = 0.0;
  double p_up = 0.0;
  /// Empty when the outcome probability is below kDegenerateThreshold.
  std::optional<StateVector> post_down;
  std::optional<StateVector> post_up;
};

/// Projective measurement of one qubit in the sigma^z basis.
MeasurementOutcome measure(const StateVector& state, int qubit);

/// Probability of finding the qubit in |up>.
double excitation_probability(const StateVector& state, int qubit);

}  // namespace qsnn
