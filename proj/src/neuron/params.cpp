#include "qsnn/neuron/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

constexpr double kIntegerTolerance = 1e-9;
const Complex kI(0.0, 1.0);

bool is_integer(double x) { return std::abs(x - std::round(x)) < kIntegerTolerance; }

double parity_sign(long long v) { return (v % 2 == 0) ? 1.0 : -1.0; }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidParams, what); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_positive_amplitude(double a, const char* name) {
  if (!(a > 0.0) || !std::isfinite(a)) invalid(std::string(name) + " must be positive and finite");
}

}  // namespace

double ExcNeuronParams::J() const {
  return j_sign * std::sqrt(std::max(0.0, l * l - k * k)) * drive_amplitude;
}

double ExcNeuronParams::tau() const { return std::numbers::pi / drive_amplitude; }

Complex ExcNeuronParams::flip_phase() const {
  const double kr = std::round(k);
  const double lr = std::round(l);
  const double j_ref = j_sign * std::sqrt(std::max(0.0, lr * lr - kr * kr));
  const auto parity = static_cast<long long>(kr + lr);
  return -kI * parity_sign(parity) * std::polar(1.0, -gamma * j_ref * std::numbers::pi);
}

double PhaseNeuronParams::tau() const { return std::numbers::pi / (2.0 * drive_amplitude); }

double PhaseNeuronParams::exchange_coefficient() const {
  return exchange == ExchangeConvention::kFullJ ? J() : 0.5 * J();
}

Complex PhaseNeuronParams::flip_phase() const {
  return kI * parity_sign(static_cast<long long>(std::round(m)));
}

FinalBeta final_layer_beta(double gamma, int l, int s, int parity_k, double drive_amplitude) {
  const double a = drive_amplitude;
  const double g2 = 1.0 + gamma * gamma;
  const double offset = 2.0 * s - l;
  const double disc = static_cast<double>(l) * l * g2 - offset * offset;
  if (disc < 0.0) {
    throw Error(ErrorCode::kNoRealSolution,
                "discriminant l^2(1+gamma^2) - (2s-l)^2 = " + fmt(disc) + " is negative");
  }
  const double sigma = parity_sign(parity_k);
  const double root_disc = std::sqrt(disc);
  FinalBeta out;
  out.beta = a / g2 * (offset + sigma * gamma * root_disc);
  // Companion root of the quadratic: beta^2 + J^2 = l^2 A^2 and gamma J = (2s - l) A - beta.
  out.J = a / g2 * (gamma * offset - sigma * root_disc);
  const double la = std::abs(l * a);
  if (std::abs(out.beta) > la * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kNoRealSolution, "|beta| exceeds |l A|");
  }
  const double scale = std::max(1.0, la);
  const double residual = std::abs(gamma * out.J - (offset * a - out.beta));
  if (residual > 1e-9 * scale || std::abs(std::hypot(out.beta, out.J) - la) > 1e-9 * scale) {
    throw Error(ErrorCode::kSignInconsistency, "phase-matching residual " + fmt(residual));
  }
  return out;
}

FinalBeta FinalLayerParams::solution() const {
  return final_layer_beta(gamma, l, s, parity_k, drive_amplitude);
}

double FinalLayerParams::coupling_beta() const {
  const double b = solution().beta;
  return variant == FinalVariant::kDetectUpUp ? b : -b;
}

double FinalLayerParams::tau() const { return std::numbers::pi / drive_amplitude; }

Complex FinalLayerParams::flip_phase() const {
  return -kI * std::polar(1.0, -local_field() * tau());
}

Complex FinalLayerParams::return_phase() const {
  return -kI * std::polar(1.0, 2.0 * solution().beta * tau());
}

void validate(const ExcNeuronParams& p) {
  require_positive_amplitude(p.drive_amplitude, "drive amplitude A");
  if (!std::isfinite(p.k) || !std::isfinite(p.l) || !std::isfinite(p.gamma)) {
    invalid("k, l and gamma must be finite");
  }
  if (p.j_sign != 1 && p.j_sign != -1) invalid("j_sign must be +1 or -1");
  if (!(p.l > p.k && p.k > 0)) invalid("requires l > k > 0 (got k=" + fmt(p.k) + ", l=" + fmt(p.l) + ")");
  if (p.mode == ParamMode::kConstraint) {
    if (!is_integer(p.k) || !is_integer(p.l)) invalid("constraint mode requires integer k and l");
    if (p.gamma == 1.0) {
      const double root = std::sqrt(p.l * p.l - p.k * p.k);
      if (!is_integer(root)) {
        invalid("Pythagorean condition violated: sqrt(l^2 - k^2) = " + fmt(root) +
                " is not an integer");
      }
    }
  }
  const double big = p.l * p.drive_amplitude;  // sqrt(J^2 + beta^2)
  const double ratios[3] = {std::abs(2 * p.beta()), std::abs(2 * p.beta() - 2 * big),
                            std::abs(2 * p.beta() + 2 * big)};
  const char* names[3] = {"Delta_0/A", "Delta_-/A", "Delta_+/A"};
  for (int i = 0; i < 3; ++i) {
    const double r = ratios[i] / p.drive_amplitude;
    if (r < p.detuning_floor) {
      invalid(std::string("detuning ratio ") + names[i] + " = " + fmt(r) + " below floor " +
              fmt(p.detuning_floor));
    }
  }
}

void validate(const PhaseNeuronParams& p) {
  require_positive_amplitude(p.drive_amplitude, "drive amplitude B");
  if (!std::isfinite(p.m) || !std::isfinite(p.n) || !std::isfinite(p.gamma)) {
    invalid("m, n and gamma must be finite");
  }
  if (!(p.n > p.m && p.m > 0)) invalid("requires n > m > 0 (got m=" + fmt(p.m) + ", n=" + fmt(p.n) + ")");
  if (p.mode == ParamMode::kConstraint && (!is_integer(p.m) || !is_integer(p.n))) {
    invalid("constraint mode requires integer m and n");
  }
  const double four_m = 4 * p.m;
  const double ratio = 2 * p.n / four_m;
  if (four_m < p.floors.min_four_m) {
    invalid("hierarchy 1 << 4m violated: 4m = " + fmt(four_m) + " < " + fmt(p.floors.min_four_m));
  }
  if (ratio < p.floors.min_ratio) {
    invalid("hierarchy 4m << 2n violated: 2n/4m = " + fmt(ratio) + " < " + fmt(p.floors.min_ratio));
  }
}

void validate(const FinalLayerParams& p) {
  require_positive_amplitude(p.drive_amplitude, "drive amplitude A");
  if (!std::isfinite(p.gamma) || !std::isfinite(p.omega)) invalid("gamma and Omega must be finite");
  if (p.l <= 0) invalid("l must be positive");
  try {
    (void)p.solution();
  } catch (const Error& e) {
    invalid(e.what());
  }
  if (p.drive_mode == FinalDriveMode::kLocalField) {
    const double r = std::abs(p.omega) / p.drive_amplitude;
    if (r < p.omega_floor) {
      invalid("local field |Omega|/A = " + fmt(r) + " below floor " + fmt(p.omega_floor));
    }
  }
}

std::vector<std::string> hierarchy_warnings(const PhaseNeuronParams& p) {
  std::vector<std::string> out;
  const double ratio = 2 * p.n / (4 * p.m);
  if (ratio < p.floors.recommended_ratio) {
    out.push_back("2n/4m = " + fmt(ratio) + " is below the recommended headroom " +
                  fmt(p.floors.recommended_ratio));
  }
  return out;
}

std::string to_string(ExchangeConvention c) {
  return c == ExchangeConvention::kFullJ ? "full_j" : "half_j";
}

std::string to_string(FinalVariant v) {
  return v == FinalVariant::kDetectUpUp ? "detect_upup" : "detect_downdown";
}

std::string to_string(FinalDriveMode m) {
  return m == FinalDriveMode::kRotating ? "rotating" : "local_field";
}

std::string to_string(ParamMode m) { return m == ParamMode::kConstraint ? "constraint" : "relaxed"; }

}  // namespace qsnn
