#include "qsnn/params/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

ExcNeuronParams solve_exc(int k, int l, double drive_amplitude, GammaMode gamma_mode) {
  if (!(l > k && k > 0)) {
    throw Error(ErrorCode::kDegenerateParams,
                "requires l > k > 0 (got k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  }
  if (!(drive_amplitude > 0.0)) throw Error(ErrorCode::kInvalidParams, "drive amplitude must be positive");
  const double root = std::sqrt(static_cast<double>(l) * l - static_cast<double>(k) * k);
  ExcNeuronParams p;
  p.k = k;
  p.l = l;
  p.drive_amplitude = drive_amplitude;
  if (gamma_mode.unity) {
    if (std::abs(root - std::round(root)) > 1e-9) {
      throw Error(ErrorCode::kNonPythagorean,
                  "sqrt(l^2 - k^2) = " + fmt(root) + " is not an integer");
    }
    p.gamma = 1.0;
  } else {
    if (gamma_mode.sign != 1 && gamma_mode.sign != -1) {
      throw Error(ErrorCode::kInvalidParams, "gamma sign must be +1 or -1");
    }
    p.gamma = gamma_mode.sign * (2.0 * gamma_mode.s - k - l + 0.5) / root;
  }
  return p;
}

PhaseSolution solve_phase(double m, double n, double drive_amplitude, const HierarchyFloors& floors) {
  if (!(n > m && m > 0)) {
    throw Error(ErrorCode::kDegenerateParams, "requires n > m > 0");
  }
  const double four_m = 4 * m;
  const double ratio = 2 * n / four_m;
  if (four_m < floors.min_four_m) {
    throw Error(ErrorCode::kHierarchyViolation,
                "4m = " + fmt(four_m) + " below floor " + fmt(floors.min_four_m));
  }
  if (ratio < floors.min_ratio) {
    throw Error(ErrorCode::kHierarchyViolation,
                "2n/4m = " + fmt(ratio) + " below floor " + fmt(floors.min_ratio));
  }
  PhaseSolution out;
  out.params.m = m;
  out.params.n = n;
  out.params.drive_amplitude = drive_amplitude;
  out.params.floors = floors;
  const bool integral = m == std::round(m) && n == std::round(n);
  out.params.mode = integral ? ParamMode::kConstraint : ParamMode::kRelaxed;
  validate(out.params);
  out.warnings = hierarchy_warnings(out.params);
  return out;
}

FinalBeta solve_final_beta(double gamma, int l, int s, int parity_k, double drive_amplitude) {
  return final_layer_beta(gamma, l, s, parity_k, drive_amplitude);
}

std::vector<PythagoreanTriple> pythagorean_triples(int max_c) {
  std::vector<PythagoreanTriple> out;
  // Euclid: primitive triples from coprime p > q > 0 of opposite parity, then multiples.
  for (int p = 2; p * p + 1 <= max_c; ++p) {
    for (int q = 1; q < p; ++q) {
      if ((p - q) % 2 == 0 || std::gcd(p, q) != 1) continue;
      const int a = p * p - q * q;
      const int b = 2 * p * q;
      const int c = p * p + q * q;
      for (int mult = 1; mult * c <= max_c; ++mult) {
        out.push_back({mult * std::min(a, b), mult * std::max(a, b), mult * c});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PythagoreanTriple& x, const PythagoreanTriple& y) {
    return x.c != y.c ? x.c < y.c : x.a < y.a;
  });
  return out;
}

}  // namespace qsnn
