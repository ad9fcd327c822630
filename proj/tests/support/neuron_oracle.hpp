#pragma once

// Reference neuron protocols assembled from oracle.hpp primitives.

#include "oracle.hpp"

namespace oracle {

struct NeuronReference {
  Mat actual;               // bare propagator with correction gates
  Mat ideal;                // target action on the protocol subspace
  std::vector<Vec> basis;   // protocol subspace
};

// Bell pair (index as in bell()) tensored with the output spin.
Vec bell_out(int bell_index, bool out_up);

Mat output_phase_gate(double phi);
Mat output_hadamard();

// Excitation neuron with gamma = 1, A = 1, J = sqrt(l^2 - k^2), corrected by the
// output phase gate phase(-arg r), r = -i (-1)^(k+l) e^{-i J pi}.
NeuronReference excitation_reference(int k, int l, double step = kFineStep);

// Phase neuron with gamma = 1, B = 1, exchange coefficient 2n, delta = 2m:
// Hadamard, exp(-iH pi/2), Hadamard, phase(-arg r), r = i (-1)^round(m).
NeuronReference phase_reference(double m, double n);

}  // namespace oracle
