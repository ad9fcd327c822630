#pragma once

#include <string>
#include <vector>

#include "qsnn/neuron/neuron.hpp"

namespace qsnn {

struct DetuningEntry {
  std::string label;
  double ratio = 0.0;  // detuning divided by the drive amplitude
};

struct DetuningReport {
  std::vector<DetuningEntry> entries;
};

/// Excitation neuron: Delta_0/A, Delta_-/A, Delta_+/A. Phase neuron: 2 delta/B.
/// Final layer: the nearest undriven transition 2(l - |beta|/A), plus 2|Omega|/A
/// in local-field mode.
DetuningReport detuning_report(const NeuronSpec& spec);

}  // namespace qsnn
