#include <gtest/gtest.h>

#include "qsnn/network/network.hpp"

namespace qsnn {
namespace {

// Eleven-qubit full-dynamics runs take about 45 s each.
TEST(ModeEquivalence, Full) {
  const NetworkSimulator embedded(make_template(TemplateKind::kFull));
  NetworkSpec spec = make_template(TemplateKind::kFull);
  spec.run_mode = RunMode::kFullDynamics;
  const NetworkSimulator dynamics(spec);
  for (BellLabel a : kBellLabels) {
    for (BellLabel b : kBellLabels) {
      const auto pa = BellAmplitudes::pure(a);
      const auto pb = BellAmplitudes::pure(b);
      const StateVector y = dynamics.run(pa, pb);
      EXPECT_GE(state_fidelity(embedded.run(pa, pb), y), 0.995);
      EXPECT_NEAR(y.norm(), 1.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace qsnn
