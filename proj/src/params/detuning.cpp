#include "qsnn/params/detuning.hpp"

#include <cmath>

namespace qsnn {

DetuningReport detuning_report(const NeuronSpec& spec) {
  DetuningReport report;
  auto add = [&report](std::string label, double ratio) {
    report.entries.push_back({std::move(label), ratio});
  };
  if (const auto* p = std::get_if<ExcNeuronParams>(&spec.params)) {
    const double a = p->drive_amplitude;
    const double big = std::sqrt(p->J() * p->J() + p->beta() * p->beta());
    add("Delta_0/A", std::abs(2 * p->beta()) / a);
    add("Delta_-/A", std::abs(2 * p->beta() - 2 * big) / a);
    add("Delta_+/A", std::abs(2 * p->beta() + 2 * big) / a);
  } else if (const auto* p = std::get_if<PhaseNeuronParams>(&spec.params)) {
    add("2delta/B", 2 * p->delta() / p->drive_amplitude);
  } else if (const auto* p = std::get_if<FinalLayerParams>(&spec.params)) {
    const double a = p->drive_amplitude;
    add("xi_transition/A", 2 * (std::abs(p->l * a) - std::abs(p->solution().beta)) / a);
    if (p->drive_mode == FinalDriveMode::kLocalField) add("2|Omega|/A", 2 * std::abs(p->omega) / a);
  }
  return report;
}

}  // namespace qsnn
