#include "neuron_oracle.hpp"

#include <cmath>

namespace oracle {

Vec bell_out(int bell_index, bool out_up) { return kron(bell(bell_index), out_up ? up() : down()); }

Mat output_phase_gate(double phi) {
  Mat p = Mat::Identity(2, 2);
  p(1, 1) = std::polar(1.0, phi);
  return op_on(3, {{2, p}});
}

Mat output_hadamard() { return op_on(3, {{2, (sx() - sz()) / std::sqrt(2.0)}}); }

namespace {

// Completes a partial isometry given as (source, image) pairs to a unitary.
Mat map_states(const std::vector<std::pair<Vec, Vec>>& pairs) {
  Mat u = Mat::Zero(8, 8);
  for (const auto& [from, to] : pairs) u += to * from.adjoint();
  Mat rest = Mat::Identity(8, 8);
  for (const auto& [from, to] : pairs) rest -= from * from.adjoint();
  return u + rest;
}

}  // namespace

NeuronReference excitation_reference(int k, int l, double step) {
  const double J = std::sqrt(static_cast<double>(l * l - k * k));
  const double beta = k;
  const C r = C(0, -1) * (((k + l) % 2) ? -1.0 : 1.0) * std::polar(1.0, -J * kPi);
  NeuronReference ref;
  ref.actual = output_phase_gate(-std::arg(r)) * piecewise_exponential(exc_h(J, beta, 1, 1), 0, kPi, step);
  // Psi stays, Phi flips; the flipped-back branch carries r / (r c) with c = 1/r.
  std::vector<std::pair<Vec, Vec>> pairs;
  for (int b : {0, 1}) pairs.push_back({bell_out(b, false), bell_out(b, false)});
  for (int b : {2, 3}) {
    pairs.push_back({bell_out(b, false), bell_out(b, true)});
    pairs.push_back({bell_out(b, true), C(0, -1) * bell_out(b, false)});
  }
  ref.ideal = map_states(pairs);
  for (const auto& p : pairs) ref.basis.push_back(p.first);
  return ref;
}

NeuronReference phase_reference(double m, double n) {
  const long rm = std::lround(m);
  const C r = C(0, (rm % 2) ? -1.0 : 1.0);
  NeuronReference ref;
  ref.actual = output_phase_gate(-std::arg(r)) * output_hadamard() *
               expm_hermitian(phase_h(2 * n, 1, 2 * m, 1), kPi / 2) * output_hadamard();
  std::vector<std::pair<Vec, Vec>> pairs;
  for (int b : {0, 2}) pairs.push_back({bell_out(b, false), bell_out(b, false)});
  for (int b : {1, 3}) {
    pairs.push_back({bell_out(b, false), bell_out(b, true)});
    pairs.push_back({bell_out(b, true), r * bell_out(b, false)});
  }
  ref.ideal = map_states(pairs);
  for (const auto& p : pairs) ref.basis.push_back(p.first);
  return ref;
}

}  // namespace oracle
