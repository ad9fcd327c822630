#pragma once

#include <string>
#include <vector>

#include "qsnn/neuron/params.hpp"

namespace qsnn {

/// Unity sets gamma = 1 and requires a Pythagorean (k, l); general picks
/// gamma = sign (2s - k - l + 1/2) / sqrt(l^2 - k^2).
struct GammaMode {
  bool unity = true;
  int s = 0;
  int sign = 1;

  static GammaMode make_unity() { return {}; }
  static GammaMode general(int s, int sign) { return {false, s, sign}; }
};

/// Throws kDegenerateParams when l <= k and kNonPythagorean in unity mode
/// when sqrt(l^2 - k^2) is not an integer. The detuning floor is not enforced.
ExcNeuronParams solve_exc(int k, int l, double drive_amplitude = 1.0,
                          GammaMode gamma_mode = GammaMode::make_unity());

struct PhaseSolution {
  PhaseNeuronParams params;
  std::vector<std::string> warnings;
};

/// Throws kHierarchyViolation naming the failing ratio.
PhaseSolution solve_phase(double m, double n, double drive_amplitude = 1.0,
                          const HierarchyFloors& floors = {});

/// Closed-form beta and J for the final layer. Throws kNoRealSolution or kSignInconsistency.
FinalBeta solve_final_beta(double gamma, int l, int s, int parity_k, double drive_amplitude = 1.0);

struct PythagoreanTriple {
  int a;  // a < b
  int b;
  int c;

  bool operator==(const PythagoreanTriple&) const = default;
};

/// All triples with hypotenuse <= max_c, sorted by (c, a).
std::vector<PythagoreanTriple> pythagorean_triples(int max_c);

}  // namespace qsnn
