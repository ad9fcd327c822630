#pragma once

#include <cstdint>
#include <vector>

#include "qsnn/core/state.hpp"

namespace qsnn {

struct FidelityReport {
  double f_avg = 0.0;
  double leakage = 0.0;
  /// |<b_i| U_ideal^dagger U_actual |b_i>| for each subspace basis state.
  std::vector<double> per_state;
  int subspace_dim = 0;
};

/// Average gate fidelity over the span of `subspace`, uniform (Haar) measure.
///
/// With M = P^dagger U_ideal^dagger U_actual P:
///   f_avg   = (Tr(M M^dagger) + |Tr M|^2) / (d (d + 1))
///   leakage = 1 - Tr(N N^dagger) / d,  N = P^dagger U_actual P
FidelityReport average_fidelity(const DenseOperator& u_actual, const DenseOperator& u_ideal,
                                const std::vector<Vector>& subspace);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Sample mean of |<psi| U_ideal^dagger U_actual |psi>|^2 over Haar-random psi in the subspace.
MonteCarloEstimate mc_average_fidelity(const DenseOperator& u_actual,
                                       const DenseOperator& u_ideal,
                                       const std::vector<Vector>& subspace,
                                       std::size_t n_samples, std::uint64_t seed);

}  // namespace qsnn
