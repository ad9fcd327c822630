#pragma once

#include <cstddef>

#include "qsnn/core/hamiltonian.hpp"
#include "qsnn/core/state.hpp"

namespace qsnn {

inline constexpr double kDefaultTolerance = 1e-9;

struct EvolveStats {
  std::size_t steps = 0;
  double norm_drift = 0.0;       // max over columns of | ||psi|| - 1 |
  double error_estimate = 0.0;   // 2-norm difference against the refined run
  bool exact = false;            // static Hamiltonian, exponentiated directly
};

/// Solves i d/dt psi = H(t) psi from t = 0 to t = duration.
///
/// The adaptive run is repeated with a 16x tighter local tolerance and the
/// refined result is returned once the two agree to `tol` in 2-norm.
StateVector evolve(const StateVector& state, const TimeDependentHamiltonian& hamiltonian,
                   double duration, double tol = kDefaultTolerance, EvolveStats* stats = nullptr);

/// Same as evolve, but over [t0, t1].
StateVector evolve_interval(const StateVector& state, const TimeDependentHamiltonian& hamiltonian,
                            double t0, double t1, double tol = kDefaultTolerance,
                            EvolveStats* stats = nullptr);

/// Column-wise evolution of every computational basis state.
DenseOperator propagator(const TimeDependentHamiltonian& hamiltonian, double duration,
                         double tol = kDefaultTolerance, EvolveStats* stats = nullptr);

/// Fixed-step Runge-Kutta-Fehlberg 7(8) solution with `steps` equal steps.
StateVector evolve_fixed_step(const StateVector& state,
                              const TimeDependentHamiltonian& hamiltonian, double duration,
                              std::size_t steps);

}  // namespace qsnn
