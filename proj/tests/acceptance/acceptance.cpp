// Runs acceptance criteria 1-11 and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "neuron_oracle.hpp"
#include "qsnn/core/observables.hpp"
#include "qsnn/fidelity/fidelity.hpp"
#include "qsnn/network/network.hpp"
#include "qsnn/neuron/neuron.hpp"
#include "qsnn/params/tune.hpp"

namespace {

using namespace qsnn;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << (ok ? "" : " [x]");
  }
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

NeuronSpec exc_spec(int k = 8, int l = 17, double floor = 10.0) {
  ExcNeuronParams p;
  p.k = k;
  p.l = l;
  p.detuning_floor = floor;
  return make_neuron(NeuronKind::kExcitation, p, {0, 1}, 2);
}

NeuronSpec phase_spec(double m, double n, ExchangeConvention ex = ExchangeConvention::kFullJ) {
  PhaseNeuronParams p;
  p.m = m;
  p.n = n;
  p.exchange = ex;
  return make_neuron(NeuronKind::kPhase, p, {0, 1}, 2);
}

NeuronSpec final_spec(FinalVariant v, FinalDriveMode mode) {
  FinalLayerParams p;
  p.variant = v;
  p.drive_mode = mode;
  const NeuronKind kind = v == FinalVariant::kDetectUpUp ? NeuronKind::kFinalUpUp : NeuronKind::kFinalDownDown;
  return make_neuron(kind, p, {0, 1}, 2);
}

BellAmplitudes random_amplitudes(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::array<Complex, 4> a;
  double norm = 0;
  for (Complex& x : a) {
    x = Complex(g(rng), g(rng));
    norm += std::norm(x);
  }
  for (Complex& x : a) x /= std::sqrt(norm);
  return BellAmplitudes::from_array(a);
}

BellAmplitudes eq7_pair() {
  BellAmplitudes a;
  a.psi_plus = 1.0 / std::sqrt(2.0);
  a.phi_minus = 1.0 / std::sqrt(2.0);
  return a;
}

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

// Largest column error, i.e. the worst basis-state deviation.
double max_column_error(const Matrix& a, const Matrix& b) { return (a - b).colwise().norm().maxCoeff(); }

Verdict criterion1() {
  Verdict o;
  const auto t0 = Clock::now();
  const FidelityReport f = neuron_fidelity(exc_spec());
  const double dt = seconds_since(t0);
  o.check(std::abs(f.f_avg - 0.9998) <= 5e-4, "exc (8,17) f_avg " + fmt(f.f_avg, 8));
  o.check(f.subspace_dim == 6, "subspace " + std::to_string(f.subspace_dim));
  o.check(dt < 30.0, "runtime " + fmt(dt, 3) + " s");
  return o;
}

Verdict criterion2() {
  Verdict o;
  const FidelityReport f = neuron_fidelity(exc_spec());
  o.check(f.leakage <= 5e-4, "exc (8,17) leakage " + fmt(f.leakage, 3));
  return o;
}

Verdict criterion3() {
  Verdict o;
  const double a = neuron_fidelity(phase_spec(3, 82)).f_avg;
  const double b = neuron_fidelity(phase_spec(5, 80)).f_avg;
  o.check(std::abs(a - 0.9907) <= 0.003, "phase (3,82) f_avg " + fmt(a, 6));
  o.check(std::abs(b - 0.9638) <= 0.005, "phase (5,80) f_avg " + fmt(b, 6));
  return o;
}

Verdict criterion4() {
  Verdict o;
  const auto t0 = Clock::now();
  for (auto [m, n, target] : {std::tuple{3.0, 82.0, 0.9955}, {5.0, 80.0, 0.9905}}) {
    PhaseNeuronParams p;
    p.m = m;
    p.n = n;
    p.mode = ParamMode::kRelaxed;
    TuneOptions opt;
    opt.budget = 300;
    const TuneResult r = tune(NeuronKind::kPhase, p, opt);
    const auto& best = std::get<PhaseNeuronParams>(r.tuned);
    o.check(r.final_fidelity >= target && r.evaluations <= 300,
            "(" + fmt(m, 3) + "," + fmt(n, 3) + ") -> (" + fmt(best.m, 5) + "," + fmt(best.n, 5) + ") f " +
                fmt(r.final_fidelity, 6) + " in " + std::to_string(r.evaluations) + " evals");
  }
  const double dt = seconds_since(t0);
  o.check(dt < 600.0, "runtime " + fmt(dt, 3) + " s");
  return o;
}

Verdict criterion5() {
  Verdict o;
  auto squared_min = [](const NeuronSpec& spec) {
    const Matrix u = neuron_unitary(spec).matrix();
    const Matrix ideal = ideal_unitary(spec).matrix();
    double worst = 1.0;
    for (const Vector& b : protocol_subspace(spec.kind)) {
      worst = std::min(worst, std::norm((ideal * b).dot(u * b)));
    }
    return worst;
  };
  const NeuronSpec exc = exc_spec();
  const NeuronSpec phase = phase_spec(3, 82);
  const FidelityReport fe = neuron_fidelity(exc);
  const FidelityReport fp = neuron_fidelity(phase);
  const double exc_min = *std::min_element(fe.per_state.begin(), fe.per_state.end());
  const double phase_min = *std::min_element(fp.per_state.begin(), fp.per_state.end());
  o.check(exc_min >= 0.999, "exc per-state min " + fmt(exc_min, 6) + " (squared " + fmt(squared_min(exc), 6) + ")");
  o.check(phase_min >= 0.985,
          "phase per-state min " + fmt(phase_min, 6) + " (squared " + fmt(squared_min(phase), 6) + ")");
  return o;
}

Verdict criterion6() {
  Verdict o;
  double worst = 0.0;
  int blocks = 0;
  for (auto [k, l] : {std::pair{3, 5}, {8, 17}, {20, 29}, {12, 13}, {5, 13}, {7, 25}}) {
    const SpectrumReport r = spectrum_report(exc_spec(k, l, 0.0));
    for (const auto& b : r.blocks) {
      worst = std::max(worst, b.max_deviation);
      ++blocks;
    }
  }
  for (auto [m, n] : {std::pair{3.0, 82.0}, {5.0, 80.0}, {2.0, 60.0}, {4.0, 100.0}}) {
    for (ExchangeConvention ex : {ExchangeConvention::kFullJ, ExchangeConvention::kHalfJ}) {
      const SpectrumReport r = spectrum_report(phase_spec(m, n, ex));
      for (const auto& b : r.blocks) {
        if (b.name != "positive") continue;
        worst = std::max(worst, b.max_deviation);
        ++blocks;
      }
    }
  }
  o.check(worst <= 1e-10, std::to_string(blocks) + " closed-form blocks, max deviation " + fmt(worst, 3));
  return o;
}

Verdict criterion7() {
  Verdict o;
  const auto t0 = Clock::now();
  for (TemplateKind kind : {TemplateKind::kReduced, TemplateKind::kFull}) {
    const bool reduced = kind == TemplateKind::kReduced;
    double diag = 1.0;
    double off = 0.0;
    for (const TruthTableRow& row : truth_table(NetworkSimulator(make_template(kind)))) {
      if (row.first == row.second) {
        diag = std::min(diag, row.p_up);
      } else {
        off = std::max(off, row.p_up);
      }
    }
    o.check(diag >= (reduced ? 0.97 : 0.95) && off <= (reduced ? 0.03 : 0.05),
            to_string(kind) + " diag min " + fmt(diag, 6) + " off max " + fmt(off, 3));
  }
  const double dt = seconds_since(t0);
  o.check(dt < 300.0, "runtime " + fmt(dt, 3) + " s");
  return o;
}

Verdict criterion8() {
  Verdict o;
  const NetworkSpec spec = make_template(TemplateKind::kReduced);
  const NetworkSimulator sim(spec);
  const StateVector out = sim.run(eq7_pair(), eq7_pair());
  const double p_up = sim.output_up_probability(out);
  o.check(std::abs(p_up - 0.5) <= 0.03, "p_up " + fmt(p_up, 6));
  const BackActionReport up = back_action(out, spec, qsnn::Outcome::kUp);
  const BackActionReport down = back_action(out, spec, qsnn::Outcome::kDown);
  o.check(up.overlaps.at(0).fidelity >= 0.97, "up-branch overlap " + fmt(up.overlaps.at(0).fidelity, 6));
  o.check(down.overlaps.at(1).fidelity >= 0.97, "down-branch overlap " + fmt(down.overlaps.at(1).fidelity, 6));
  return o;
}

Verdict criterion9() {
  Verdict o;
  const NetworkSimulator sim(make_template(TemplateKind::kReduced));
  std::mt19937_64 rng(8);
  int exact = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const BellAmplitudes a = random_amplitudes(rng);
    const BellAmplitudes b = random_amplitudes(rng);
    const auto x = a.as_array();
    const auto y = b.as_array();
    double closed = 0.0;
    for (int c = 0; c < 4; ++c) closed += std::norm(x[c]) * std::norm(y[c]);
    const double k = bell_kernel(a, b);
    if (k == closed && k == bell_kernel(b, a)) ++exact;
    worst = std::max(worst, std::abs(simulated_bell_kernel(sim, a, b) - k));
  }
  o.check(exact == 100, std::to_string(exact) + "/100 exact");
  o.check(worst <= 0.03, "simulated max deviation " + fmt(worst, 3));
  return o;
}

Verdict criterion10() {
  Verdict o;
  // Norm drift over every protocol input of every neuron and every network run.
  double drift = 0.0;
  const std::vector<NeuronSpec> neurons = {
      exc_spec(), phase_spec(3, 82), phase_spec(5, 80),
      final_spec(FinalVariant::kDetectUpUp, FinalDriveMode::kRotating),
      final_spec(FinalVariant::kDetectDownDown, FinalDriveMode::kLocalField)};
  for (const NeuronSpec& s : neurons) {
    for (std::size_t i = 0; i < 8; ++i) {
      drift = std::max(drift, std::abs(apply_neuron(StateVector::basis(3, i), s).norm() - 1.0));
    }
  }
  for (TemplateKind kind : {TemplateKind::kReduced, TemplateKind::kFull}) {
    const NetworkSimulator sim(make_template(kind));
    for (BellLabel a : kBellLabels) {
      for (BellLabel b : kBellLabels) {
        drift = std::max(drift, std::abs(sim.run(BellAmplitudes::pure(a), BellAmplitudes::pure(b)).norm() - 1.0));
      }
    }
  }
  NetworkSpec dyn = make_template(TemplateKind::kReduced);
  dyn.run_mode = RunMode::kFullDynamics;
  const NetworkSimulator dyn_sim(dyn);
  for (BellLabel a : kBellLabels) {
    drift = std::max(drift, std::abs(dyn_sim.run(BellAmplitudes::pure(a), eq7_pair()).norm() - 1.0));
  }
  o.check(drift < 1e-9, "norm drift " + fmt(drift, 3));

  // Integrator against the fine-step piecewise-exponential oracle.
  double integ = 0.0;
  const oracle::NeuronReference exc_ref = oracle::excitation_reference(8, 17);
  integ = std::max(integ, max_column_error(neuron_unitary(exc_spec(), 1e-10).matrix(), exc_ref.actual));
  const FinalBeta fb = final_layer_beta(1, 17, 5, 0, 1);
  const oracle::Mat rot = oracle::piecewise_exponential(oracle::final_rotating_h(fb.J, fb.beta, 1, 1, true), 0,
                                                        oracle::kPi);
  integ = std::max(integ, max_column_error(
                              bare_unitary(final_spec(FinalVariant::kDetectUpUp, FinalDriveMode::kRotating), 1e-10)
                                  .matrix(),
                              rot));
  const oracle::Mat rot_down = oracle::piecewise_exponential(
      oracle::final_rotating_h(fb.J, -fb.beta, 1, 1, false), 0, oracle::kPi);
  integ = std::max(integ, max_column_error(
                              bare_unitary(final_spec(FinalVariant::kDetectDownDown, FinalDriveMode::kRotating),
                                           1e-10)
                                  .matrix(),
                              rot_down));
  const oracle::NeuronReference phase_ref = oracle::phase_reference(3, 82);
  integ = std::max(integ, max_column_error(neuron_unitary(phase_spec(3, 82)).matrix(), phase_ref.actual));
  o.check(integ <= 1e-7, "integrator vs oracle " + fmt(integ, 3));

  // Monte-Carlo fidelity against the closed form: 8 neuron operators, 12 perturbed unitaries.
  int agree = 0;
  int cases = 0;
  std::vector<std::tuple<DenseOperator, DenseOperator, std::vector<Vector>>> inputs;
  for (const NeuronSpec& s : {exc_spec(), exc_spec(3, 5, 0.0), exc_spec(20, 29), phase_spec(3, 82), phase_spec(5, 80),
                              final_spec(FinalVariant::kDetectUpUp, FinalDriveMode::kRotating),
                              final_spec(FinalVariant::kDetectDownDown, FinalDriveMode::kRotating),
                              final_spec(FinalVariant::kDetectUpUp, FinalDriveMode::kLocalField)}) {
    inputs.emplace_back(neuron_unitary(s), ideal_unitary(s), protocol_subspace(s.kind));
  }
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> eps(0.05, 0.5);
  while (inputs.size() < 20) {
    const Matrix ideal = oracle::expm_hermitian(random_hermitian(8, rng), 1.0);
    const Matrix actual = ideal * oracle::expm_hermitian(random_hermitian(8, rng), eps(rng));
    inputs.emplace_back(DenseOperator(actual), DenseOperator(ideal), protocol_subspace(NeuronKind::kExcitation));
  }
  for (const auto& [actual, ideal, basis] : inputs) {
    const double closed = average_fidelity(actual, ideal, basis).f_avg;
    const auto mc = mc_average_fidelity(actual, ideal, basis, 20000, 1000 + cases);
    ++cases;
    if (std::abs(mc.mean - closed) <= 3 * mc.standard_error) ++agree;
  }
  o.check(agree == cases, "Monte-Carlo within 3 SE on " + std::to_string(agree) + "/" + std::to_string(cases));
  return o;
}

Verdict criterion11() {
  Verdict o;
  double worst = 1.0;
  for (FinalVariant v : {FinalVariant::kDetectUpUp, FinalVariant::kDetectDownDown}) {
    const NeuronSpec rot = final_spec(v, FinalDriveMode::kRotating);
    const NeuronSpec loc = final_spec(v, FinalDriveMode::kLocalField);
    for (std::size_t input = 0; input < 4; ++input) {
      const StateVector s = StateVector::basis(3, input << 1);
      worst = std::min(worst, state_fidelity(apply_neuron(s, rot), apply_neuron(s, loc)));
    }
  }
  o.check(worst >= 0.99, "min state fidelity over 2 variants x 4 inputs " + fmt(worst, 6));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"excitation fidelity", criterion1},  {"excitation leakage", criterion2},
      {"phase fidelity", criterion3},       {"tuned phase fidelity", criterion4},
      {"neuron truth tables", criterion5},  {"spectrum closed forms", criterion6},
      {"network truth tables", criterion7}, {"back-action", criterion8},
      {"kernel", criterion9},               {"numerical integrity", criterion10},
      {"final-layer equivalence", criterion11}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("threw: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
