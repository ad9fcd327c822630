#include "qsnn/fidelity/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;

Matrix basis_matrix(const DenseOperator& u_actual, const DenseOperator& u_ideal,
                    const std::vector<Vector>& subspace) {
  if (u_actual.dim() != u_ideal.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "actual and ideal operators differ in dimension");
  }
  if (subspace.empty()) throw Error(ErrorCode::kNonOrthonormalSubspace, "empty subspace");
  const auto dim = static_cast<Eigen::Index>(u_actual.dim());
  const auto d = static_cast<Eigen::Index>(subspace.size());
  Matrix p(dim, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (subspace[static_cast<std::size_t>(i)].size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "subspace vector has wrong length");
    }
    p.col(i) = subspace[static_cast<std::size_t>(i)];
  }
  const double err = (p.adjoint() * p - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > kOrthonormalTolerance) {
    throw Error(ErrorCode::kNonOrthonormalSubspace,
                "Gram matrix deviates from identity by " + std::to_string(err));
  }
  return p;
}

}  // namespace

FidelityReport average_fidelity(const DenseOperator& u_actual, const DenseOperator& u_ideal,
                                const std::vector<Vector>& subspace) {
  const Matrix p = basis_matrix(u_actual, u_ideal, subspace);
  const double d = static_cast<double>(p.cols());
  const Matrix m = p.adjoint() * u_ideal.matrix().adjoint() * u_actual.matrix() * p;
  const Matrix n = p.adjoint() * u_actual.matrix() * p;

  FidelityReport report;
  report.subspace_dim = static_cast<int>(p.cols());
  const double tr_mm = (m * m.adjoint()).trace().real();
  report.f_avg = std::clamp((tr_mm + std::norm(m.trace())) / (d * (d + 1)), 0.0, 1.0);
  report.leakage = std::clamp(1.0 - (n * n.adjoint()).trace().real() / d, 0.0, 1.0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    report.per_state.push_back(std::min(1.0, std::abs(m(i, i))));
  }
  return report;
}

MonteCarloEstimate mc_average_fidelity(const DenseOperator& u_actual,
                                       const DenseOperator& u_ideal,
                                       const std::vector<Vector>& subspace,
                                       std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 100) throw Error(ErrorCode::kInvalidArgument, "n_samples must be >= 100");
  const Matrix p = basis_matrix(u_actual, u_ideal, subspace);
  const Matrix v = u_ideal.matrix().adjoint() * u_actual.matrix();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  Vector coeffs(p.cols());
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) = Complex(gauss(rng), gauss(rng));
    const Vector psi = p * coeffs.normalized();
    const double f = std::norm(psi.dot(v * psi));
    sum += f;
    sum_sq += f * f;
  }
  const auto n = static_cast<double>(n_samples);
  MonteCarloEstimate est;
  est.samples = n_samples;
  est.mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1));
  est.standard_error = std::sqrt(var / n);
  return est;
}

}  // namespace qsnn
