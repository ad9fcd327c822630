#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qsnn/neuron/neuron.hpp"

namespace qsnn {

struct TuneOptions {
  std::size_t budget = 300;  // maximum fidelity evaluations, including the start
  std::uint64_t seed = 0;
  double box = 0.02;         // relative half-width of the search box around the start
  double tol = kDefaultTolerance;
};

enum class TuneStatus { kConverged, kBudgetExhausted };

std::string to_string(TuneStatus status);

struct TuneResult {
  NeuronParams initial;
  NeuronParams tuned;
  double initial_fidelity = 0.0;
  double final_fidelity = 0.0;
  std::size_t evaluations = 0;
  TuneStatus status = TuneStatus::kBudgetExhausted;
};

/// Nelder-Mead over (k, l) for the excitation neuron or (m, n) for the phase
/// neuron, maximizing the protocol average fidelity inside the box. The
/// initial simplex orientation is drawn from `seed`. Never returns a point
/// worse than the start.
TuneResult tune(NeuronKind kind, const NeuronParams& initial, const TuneOptions& options = {});

}  // namespace qsnn
