#include "qsnn/params/tune.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "qsnn/core/error.hpp"

namespace qsnn {

namespace {

using Point = std::array<double, 2>;

struct Vertex {
  Point u;           // box coordinates in [-1, 1]^2
  double cost;       // negative fidelity
};

class Objective {
 public:
  Objective(NeuronKind kind, NeuronParams start, const TuneOptions& options)
      : kind_(kind), start_(std::move(start)), options_(options) {
    if (const auto* p = std::get_if<ExcNeuronParams>(&start_)) {
      origin_ = {p->k, p->l};
    } else if (const auto* p = std::get_if<PhaseNeuronParams>(&start_)) {
      origin_ = {p->m, p->n};
    } else {
      throw Error(ErrorCode::kInvalidArgument, "tune supports excitation and phase neurons only");
    }
  }

  NeuronParams params_at(const Point& u) const {
    NeuronParams out = start_;
    const double x0 = origin_[0] * (1 + options_.box * u[0]);
    const double x1 = origin_[1] * (1 + options_.box * u[1]);
    if (auto* p = std::get_if<ExcNeuronParams>(&out)) {
      p->k = x0;
      p->l = x1;
      p->mode = ParamMode::kRelaxed;
    } else if (auto* p = std::get_if<PhaseNeuronParams>(&out)) {
      p->m = x0;
      p->n = x1;
      p->mode = ParamMode::kRelaxed;
    }
    return out;
  }

  double fidelity(const NeuronParams& params) {
    ++evaluations_;
    try {
      return neuron_fidelity(make_neuron(kind_, params, {0, 1}, 2), options_.tol).f_avg;
    } catch (const Error& e) {
      if (!is_validation_error(e.code())) throw;
      return 0.0;
    }
  }

  double cost(const Point& u) { return -fidelity(params_at(u)); }

  std::size_t evaluations() const { return evaluations_; }
  bool exhausted() const { return evaluations_ >= options_.budget; }

 private:
  NeuronKind kind_;
  NeuronParams start_;
  TuneOptions options_;
  Point origin_{};
  std::size_t evaluations_ = 0;
};

Point clamp_box(Point u) {
  for (double& x : u) x = std::clamp(x, -1.0, 1.0);
  return u;
}

Point affine(const Point& a, const Point& b, double t) {
  // a + t (b - a)
  return clamp_box({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
}

constexpr double kInitialStep = 0.25;
constexpr double kCostSpread = 1e-8;
constexpr double kSimplexSize = 1e-4;

}  // namespace

std::string to_string(TuneStatus status) {
  return status == TuneStatus::kConverged ? "converged" : "budget_exhausted";
}

TuneResult tune(NeuronKind kind, const NeuronParams& initial, const TuneOptions& options) {
  if (options.budget < 1) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 1");
  if (!(options.box > 0.0)) throw Error(ErrorCode::kInvalidArgument, "box must be positive");
  Objective objective(kind, initial, options);

  TuneResult result;
  result.initial = initial;
  result.tuned = initial;
  result.initial_fidelity = objective.fidelity(initial);
  result.final_fidelity = result.initial_fidelity;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coin(0, 1);
  const double s0 = coin(rng) ? kInitialStep : -kInitialStep;
  const double s1 = coin(rng) ? kInitialStep : -kInitialStep;

  std::vector<Vertex> simplex = {{{0.0, 0.0}, -result.initial_fidelity}};
  bool converged = false;
  for (const Point& u : {Point{s0, 0.0}, Point{0.0, s1}}) {
    if (objective.exhausted()) break;
    simplex.push_back({u, objective.cost(u)});
  }

  if (simplex.size() == 3) {
    auto order = [&simplex] {
      std::sort(simplex.begin(), simplex.end(),
                [](const Vertex& a, const Vertex& b) { return a.cost < b.cost; });
    };
    order();
    while (!objective.exhausted()) {
      const double spread = simplex[2].cost - simplex[0].cost;
      double size = 0.0;
      for (int i = 1; i < 3; ++i) {
        size = std::max({size, std::abs(simplex[i].u[0] - simplex[0].u[0]),
                         std::abs(simplex[i].u[1] - simplex[0].u[1])});
      }
      if (spread < kCostSpread && size < kSimplexSize) {
        converged = true;
        break;
      }

      const Point centroid = {(simplex[0].u[0] + simplex[1].u[0]) / 2,
                              (simplex[0].u[1] + simplex[1].u[1]) / 2};
      const Vertex& worst = simplex[2];
      const Point xr = affine(centroid, worst.u, -1.0);
      const double fr = objective.cost(xr);

      if (fr < simplex[0].cost) {
        if (objective.exhausted()) {
          simplex[2] = {xr, fr};
        } else {
          const Point xe = affine(centroid, worst.u, -2.0);
          const double fe = objective.cost(xe);
          simplex[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        }
      } else if (fr < simplex[1].cost) {
        simplex[2] = {xr, fr};
      } else {
        if (objective.exhausted()) break;
        const bool outside = fr < worst.cost;
        const Point xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, worst.u, 0.5);
        const double fc = objective.cost(xc);
        if (fc < std::min(fr, worst.cost)) {
          simplex[2] = {xc, fc};
        } else {
          for (int i = 1; i < 3 && !objective.exhausted(); ++i) {
            simplex[i].u = affine(simplex[0].u, simplex[i].u, 0.5);
            simplex[i].cost = objective.cost(simplex[i].u);
          }
        }
      }
      order();
    }
    order();
    if (-simplex[0].cost > result.initial_fidelity) {
      result.tuned = objective.params_at(simplex[0].u);
      result.final_fidelity = -simplex[0].cost;
    }
  }

  result.evaluations = objective.evaluations();
  result.status = converged ? TuneStatus::kConverged : TuneStatus::kBudgetExhausted;
  return result;
}

}  // namespace qsnn
