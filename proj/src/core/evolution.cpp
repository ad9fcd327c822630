#include "qsnn/core/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

namespace odeint = boost::numeric::odeint;

// Real storage for odeint: interleaved (re, im) pairs, `batch` vectors of length dim.
using RealState = std::vector<double>;

constexpr double kNormDriftLimit = 1e-7;
constexpr std::size_t kExactDimLimit = 256;
constexpr int kMaxRefinements = 4;

struct Schrodinger {
  const TimeDependentHamiltonian* h;
  std::size_t batch;

  void operator()(const RealState& x, RealState& dxdt, double t) const {
    const auto* in = reinterpret_cast<const Complex*>(x.data());
    auto* out = reinterpret_cast<Complex*>(dxdt.data());
    h->apply(t, in, out, batch);
    const std::size_t n = x.size() / 2;
    for (std::size_t i = 0; i < n; ++i) out[i] *= Complex(0, -1);
  }
};

RealState pack(const Matrix& columns) {
  RealState x(static_cast<std::size_t>(columns.size()) * 2);
  std::copy_n(reinterpret_cast<const double*>(columns.data()), x.size(), x.data());
  return x;
}

Matrix unpack(const RealState& x, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  std::copy_n(x.data(), x.size(), reinterpret_cast<double*>(m.data()));
  return m;
}

std::size_t run_adaptive(const TimeDependentHamiltonian& h, RealState& x, std::size_t batch,
                         double t0, double t1, double local_tol) {
  auto stepper = odeint::make_controlled(local_tol, 0.0, odeint::runge_kutta_fehlberg78<RealState>());
  const double scale = std::max(h.norm_bound(), 1.0);
  const double dt0 = std::min(0.1 / scale, t1 - t0);
  return odeint::integrate_adaptive(stepper, Schrodinger{&h, batch}, x, t0, t1, dt0);
}

double max_column_distance(const Matrix& a, const Matrix& b) {
  return (a - b).colwise().norm().maxCoeff();
}

Matrix static_exponential(const TimeDependentHamiltonian& h, double duration) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h.dense_at(0.0));
  const Vector phases =
      (eig.eigenvalues().cast<Complex>() * Complex(0, -duration)).array().exp().matrix();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Evolves the columns of `initial` over [t0, t1].
Matrix evolve_columns(const Matrix& initial, const TimeDependentHamiltonian& h, double t0,
                      double t1, double tol, EvolveStats* stats) {
  if (static_cast<std::size_t>(initial.rows()) != h.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state dimension " + std::to_string(initial.rows()) +
                    " does not match Hamiltonian dimension " + std::to_string(h.dim()));
  }
  if (!(t1 >= t0) || !std::isfinite(t1 - t0)) {
    throw Error(ErrorCode::kInvalidArgument, "duration must be finite and non-negative");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");

  EvolveStats local;
  Matrix result;
  if (t1 == t0) {
    result = initial;
  } else if (h.is_time_independent() && h.dim() <= kExactDimLimit) {
    result = static_exponential(h, t1 - t0) * initial;
    local.exact = true;
  } else {
    const auto batch = static_cast<std::size_t>(initial.cols());
    double local_tol = tol * 0.1;
    RealState coarse = pack(initial);
    local.steps += run_adaptive(h, coarse, batch, t0, t1, local_tol);
    Matrix coarse_m = unpack(coarse, initial.rows(), initial.cols());
    for (int refine = 0;; ++refine) {
      local_tol /= 16.0;
      RealState fine = pack(initial);
      local.steps += run_adaptive(h, fine, batch, t0, t1, local_tol);
      Matrix fine_m = unpack(fine, initial.rows(), initial.cols());
      local.error_estimate = max_column_distance(coarse_m, fine_m);
      result = std::move(fine_m);
      if (local.error_estimate <= tol || refine + 1 >= kMaxRefinements) break;
      coarse_m = result;
    }
  }

  const Eigen::RowVectorXd in_norms = initial.colwise().norm();
  const Eigen::RowVectorXd out_norms = result.colwise().norm();
  local.norm_drift = (out_norms - in_norms).cwiseAbs().maxCoeff();
  if (local.norm_drift > kNormDriftLimit) {
    throw Error(ErrorCode::kNormDriftExceeded,
                "norm drifted by " + std::to_string(local.norm_drift));
  }
  for (Eigen::Index c = 0; c < result.cols(); ++c) {
    result.col(c) *= in_norms(c) / out_norms(c);
  }
  if (stats) *stats = local;
  return result;
}

}  // namespace

StateVector evolve(const StateVector& state, const TimeDependentHamiltonian& hamiltonian,
                   double duration, double tol, EvolveStats* stats) {
  return evolve_interval(state, hamiltonian, 0.0, duration, tol, stats);
}

StateVector evolve_interval(const StateVector& state, const TimeDependentHamiltonian& hamiltonian,
                            double t0, double t1, double tol, EvolveStats* stats) {
  Matrix out = evolve_columns(state.amplitudes(), hamiltonian, t0, t1, tol, stats);
  return StateVector::from_amplitudes(out.col(0));
}

DenseOperator propagator(const TimeDependentHamiltonian& hamiltonian, double duration, double tol,
                         EvolveStats* stats) {
  const auto d = static_cast<Eigen::Index>(hamiltonian.dim());
  Matrix u = evolve_columns(Matrix::Identity(d, d), hamiltonian, 0.0, duration, tol, stats);
  return DenseOperator::unitary(std::move(u));
}

StateVector evolve_fixed_step(const StateVector& state,
                              const TimeDependentHamiltonian& hamiltonian, double duration,
                              std::size_t steps) {
  if (state.dim() != hamiltonian.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and Hamiltonian registers differ");
  }
  if (steps == 0) throw Error(ErrorCode::kInvalidArgument, "steps must be positive");
  odeint::runge_kutta_fehlberg78<RealState> stepper;
  RealState x = pack(state.amplitudes());
  const Schrodinger sys{&hamiltonian, 1};
  const double dt = duration / static_cast<double>(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    stepper.do_step(sys, x, dt * static_cast<double>(i), dt);
  }
  return StateVector::from_amplitudes(unpack(x, state.amplitudes().size(), 1).col(0), true);
}

}  // namespace qsnn
