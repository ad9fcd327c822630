#include "network_oracle.hpp"

#include <cmath>
#include <vector>

namespace oracle {
namespace {

// Final layer with gamma = 1, l = 17, s = 5, k even: beta = 8, J = -15.
constexpr double kFinalBeta = 8.0;
constexpr double kFinalJ = -15.0;

struct Step {
  Mat op;  // 8x8 on (input, input, output)
  std::vector<int> targets;
};

Mat strip_phase(const Mat& corrected, double applied) { return output_phase_gate(-applied) * corrected; }

Mat exc_op(bool with_phase) {
  const Mat u = excitation_reference(8, 17).actual;
  const double J = std::sqrt(17.0 * 17.0 - 8.0 * 8.0);
  const C r = C(0, -1) * std::polar(1.0, -J * kPi);
  return with_phase ? u : strip_phase(u, -std::arg(r));
}

Mat phase_op(bool with_phase) {
  const Mat u = phase_reference(3, 82).actual;
  return with_phase ? u : strip_phase(u, -std::arg(C(0, -1)));
}

// Rotating drive; the flip phase is -i, cancelled by phase(pi/2).
Mat final_op(bool upup) {
  const double beta = upup ? kFinalBeta : -kFinalBeta;
  return output_phase_gate(kPi / 2) *
         piecewise_exponential(final_rotating_h(kFinalJ, beta, 1, 1, upup), 0, kPi);
}

std::array<double, 16> run(const std::vector<Step>& steps, int n, int out) {
  const long dim = 1L << n;
  std::vector<Vec> states;
  Vec rest = Vec::Ones(1);
  for (int q = 4; q < n; ++q) rest = kron(rest, down());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) states.push_back(kron(kron(bell(i), bell(j)), rest));
  }
  for (const Step& s : steps) {
    const Mat big = embed_by_permutation(s.op, s.targets, n);
    for (Vec& v : states) v = big * v;
  }
  std::array<double, 16> p{};
  const long mask = 1L << (n - 1 - out);
  for (int c = 0; c < 16; ++c) {
    for (long x = 0; x < dim; ++x) {
      if (x & mask) p[c] += std::norm(states[c](x));
    }
  }
  return p;
}

}  // namespace

std::array<double, 16> reduced_network_p_up() {
  const Mat exc_first = exc_op(false);
  const Mat exc_last = exc_op(true);
  const Mat phase_first = phase_op(false);
  const Mat phase_last = phase_op(true);
  return run({{exc_first, {0, 1, 5}},
              {exc_last, {2, 3, 5}},
              {phase_first, {0, 1, 4}},
              {phase_last, {2, 3, 4}},
              {final_op(false), {4, 5, 6}}},
             7, 6);
}

std::array<double, 16> full_network_p_up() {
  const Mat exc = exc_op(true);
  const Mat phase = phase_op(true);
  return run({{exc, {0, 1, 5}},
              {phase, {0, 1, 4}},
              {exc, {2, 3, 7}},
              {phase, {2, 3, 6}},
              {exc, {4, 6, 8}},
              {exc, {5, 7, 9}},
              {final_op(true), {8, 9, 10}}},
             11, 10);
}

}  // namespace oracle
