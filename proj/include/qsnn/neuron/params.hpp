#pragma once

#include <string>
#include <vector>

#include "qsnn/core/types.hpp"

namespace qsnn {

/// Constraint mode requires the integer parameters the phase-matching
/// conditions are written for; relaxed mode accepts tuned real values.
enum class ParamMode { kConstraint, kRelaxed };

struct ExcNeuronParams {
  double k = 8.0;
  double l = 17.0;
  double gamma = 1.0;
  double drive_amplitude = 1.0;  // A
  int j_sign = 1;
  ParamMode mode = ParamMode::kConstraint;
  double detuning_floor = 10.0;

  double beta() const { return k * drive_amplitude; }
  double J() const;
  double tau() const;
  double drive_frequency() const { return 2.0 * beta(); }

  /// Phase of the flipping states relative to the unflipped ones after the
  /// bare evolution: -i (-1)^{k+l} e^{-i gamma J tau}, evaluated at the
  /// nearest integer (k, l).
  Complex flip_phase() const;

  bool operator==(const ExcNeuronParams&) const = default;
};

/// Exchange coefficient multiplying (XX + YY + gamma ZZ) in the phase neuron.
enum class ExchangeConvention {
  kFullJ,  // J
  kHalfJ,  // J / 2
};

struct HierarchyFloors {
  double min_four_m = 8.0;          // 4m >= 8
  double min_ratio = 5.0;           // 2n / 4m >= 5
  double recommended_ratio = 10.0;  // warn below this

  bool operator==(const HierarchyFloors&) const = default;
};

struct PhaseNeuronParams {
  double m = 3.0;
  double n = 82.0;
  double drive_amplitude = 1.0;  // B
  double gamma = 1.0;
  ParamMode mode = ParamMode::kConstraint;
  ExchangeConvention exchange = ExchangeConvention::kFullJ;
  HierarchyFloors floors;

  double J() const { return 2.0 * n * drive_amplitude; }
  double delta() const { return 2.0 * m * drive_amplitude; }
  double tau() const;
  double exchange_coefficient() const;

  /// Flipped/unflipped phase ratio of the Hadamard-conjugated evolution: i (-1)^round(m).
  Complex flip_phase() const;

  bool operator==(const PhaseNeuronParams&) const = default;
};

enum class FinalVariant { kDetectUpUp, kDetectDownDown };
enum class FinalDriveMode { kRotating, kLocalField };

struct FinalBeta {
  double beta = 0.0;
  double J = 0.0;
};

/// beta = A/(1+g^2) ((2s-l) + (-1)^k g sqrt(l^2 (1+g^2) - (2s-l)^2)) and the
/// J sign satisfying +-g sqrt(l^2 A^2 - beta^2) = (2s-l) A - beta.
FinalBeta final_layer_beta(double gamma, int l, int s, int parity_k, double drive_amplitude);

struct FinalLayerParams {
  FinalVariant variant = FinalVariant::kDetectUpUp;
  FinalDriveMode drive_mode = FinalDriveMode::kRotating;
  int l = 17;
  int s = 5;
  int parity_k = 0;
  double gamma = 1.0;
  double drive_amplitude = 1.0;  // A
  double omega = 50.0;           // local_field mode only
  double omega_floor = 20.0;

  FinalBeta solution() const;
  /// Z2 Z3 coupling actually placed in the Hamiltonian; negated for detect_downdown.
  double coupling_beta() const;
  double tau() const;
  double local_field() const { return drive_mode == FinalDriveMode::kLocalField ? omega : 0.0; }

  /// Phase picked up by the detected pair when the output flips up, relative
  /// to the unflipped states: -i e^{-i Omega tau}.
  Complex flip_phase() const;
  /// Same for the reverse flip: -i e^{2 i beta tau}.
  Complex return_phase() const;

  bool operator==(const FinalLayerParams&) const = default;
};

/// Each throws Error(kInvalidParams) naming the violated invariant.
void validate(const ExcNeuronParams& p);
void validate(const PhaseNeuronParams& p);
void validate(const FinalLayerParams& p);

/// Soft hierarchy findings that do not invalidate the parameters.
std::vector<std::string> hierarchy_warnings(const PhaseNeuronParams& p);

std::string to_string(ExchangeConvention c);
std::string to_string(FinalVariant v);
std::string to_string(FinalDriveMode m);
std::string to_string(ParamMode m);

}  // namespace qsnn
