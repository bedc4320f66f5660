// Copyright 2026 The SQNN Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqnn/training.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sqnn/errors.h"
#include "sqnn/optimize.h"
#include "sqnn/random.h"

namespace sqnn {
namespace {

constexpr std::uint64_t kInitStream = 0x696e6974;  // "init"

void CheckParamCount(const AnsatzSpec& spec, std::size_t got) {
  const std::size_t expected = ParamCount(spec);
  if (got != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " parameters, got " +
                                std::to_string(got));
  }
}

void CheckDataset(const AnsatzSpec& spec, const LabeledDataset& data) {
  if (data.empty()) throw std::invalid_argument("dataset is empty");
  if (data.dim() != static_cast<std::size_t>(spec.input_dim)) {
    throw std::invalid_argument("dataset has " + std::to_string(data.dim()) +
                                " features, ansatz expects " + std::to_string(spec.input_dim));
  }
}

// Adds the gradient of 1 - |<label|psi>|^2 for one sample to grad and
// returns the sample loss.
double AccumulateSample(const Circuit& circuit, std::span<const double> params, int label,
                        std::span<double> grad, std::vector<std::array<Complex, 2>>& states) {
  const std::size_t k_gates = circuit.gates.size();
  std::vector<Mat2> mats(k_gates);
  states.resize(k_gates + 1);
  states[0] = {1.0, 0.0};
  for (std::size_t k = 0; k < k_gates; ++k) {
    mats[k] = circuit.gates[k].Matrix(params);
    const auto& s = states[k];
    states[k + 1] = {mats[k][0] * s[0] + mats[k][1] * s[1], mats[k][2] * s[0] + mats[k][3] * s[1]};
  }
  const Complex amp = states[k_gates][label];

  // Row vector <label| G_K ... G_{k+1}, built from the output side.
  std::array<Complex, 2> bra = {label == 0 ? 1.0 : 0.0, label == 1 ? 1.0 : 0.0};
  for (std::size_t k = k_gates; k-- > 0;) {
    const ParametricGate& gate = circuit.gates[k];
    const auto& in = states[k];
    for (int which = 0; which < gate.AngleCount(); ++which) {
      const Mat2 d = gate.AngleDerivative(which, params);
      const Complex d_amp = bra[0] * (d[0] * in[0] + d[1] * in[1]) + bra[1] * (d[2] * in[0] + d[3] * in[1]);
      const double d_loss = -2.0 * (std::conj(amp) * d_amp).real();
      const AffineAngle& angle = gate.angles[which];
      for (int t = 0; t < angle.n_terms; ++t) grad[angle.terms[t].param] += d_loss * angle.terms[t].coef;
    }
    const Mat2& m = mats[k];
    bra = {bra[0] * m[0] + bra[1] * m[2], bra[0] * m[1] + bra[1] * m[3]};
  }
  return 1.0 - std::norm(amp);
}

}  // namespace

std::string_view ToString(OptimizerKind kind) {
  return kind == OptimizerKind::kLbfgs ? "lbfgs" : "adam";
}

std::string_view ToString(GradientMode mode) {
  return mode == GradientMode::kAnalytic ? "analytic" : "fd";
}

OptimizerKind ParseOptimizerKind(std::string_view name) {
  if (name == "lbfgs") return OptimizerKind::kLbfgs;
  if (name == "adam") return OptimizerKind::kAdam;
  throw std::invalid_argument("unknown optimizer '" + std::string(name) + "' (expected lbfgs or adam)");
}

GradientMode ParseGradientMode(std::string_view name) {
  if (name == "analytic") return GradientMode::kAnalytic;
  if (name == "fd") return GradientMode::kFiniteDifference;
  throw std::invalid_argument("unknown gradient mode '" + std::string(name) + "' (expected analytic or fd)");
}

void ClassifierConfig::Validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("threshold must lie strictly between 0 and 1");
  }
}

void TrainConfig::Validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning_rate must be positive");
  }
  if (!(fd_step > 0.0 && fd_step <= 1e-2)) throw std::invalid_argument("fd_step must be in (0, 1e-2]");
}

QubitState LabelState(int label) {
  if (label == 0) return QubitState::Zero();
  if (label == 1) return QubitState::One();
  throw std::invalid_argument("label must be 0 or 1, got " + std::to_string(label));
}

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

double SampleLoss(const AnsatzSpec& spec, const ParamVector& params, std::span<const double> features,
                  int label) {
  return 1.0 - PureFidelity(Forward(spec, params, features), LabelState(label));
}

double DatasetLoss(const AnsatzSpec& spec, const ParamVector& params, const LabeledDataset& data) {
  CheckDataset(spec, data);
  std::vector<double> terms(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    terms[i] = SampleLoss(spec, params, data.Row(i), data.Label(i));
  }
  return PairwiseSum(terms);
}

double LossAndGradient(const AnsatzSpec& spec, std::span<const double> params,
                       const LabeledDataset& data, std::span<double> grad) {
  CheckDataset(spec, data);
  CheckParamCount(spec, params.size());
  CheckParamCount(spec, grad.size());
  std::fill(grad.begin(), grad.end(), 0.0);
  std::vector<double> terms(data.size());
  std::vector<std::array<Complex, 2>> states;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Circuit circuit = BuildCircuit(spec, data.Row(i));
    terms[i] = AccumulateSample(circuit, params, data.Label(i), grad, states);
  }
  return PairwiseSum(terms);
}

std::vector<double> Gradient(const AnsatzSpec& spec, const ParamVector& params,
                             const LabeledDataset& data, GradientMode mode, double fd_step) {
  CheckParamCount(spec, params.size());
  std::vector<double> grad(params.size(), 0.0);
  if (mode == GradientMode::kAnalytic) {
    LossAndGradient(spec, params.view(), data, grad);
    return grad;
  }
  if (!(fd_step > 0.0 && fd_step <= 1e-2)) throw std::invalid_argument("fd_step must be in (0, 1e-2]");
  ParamVector probe = params;
  for (std::size_t j = 0; j < params.size(); ++j) {
    probe[j] = params[j] + fd_step;
    const double up = DatasetLoss(spec, probe, data);
    probe[j] = params[j] - fd_step;
    const double down = DatasetLoss(spec, probe, data);
    probe[j] = params[j];
    grad[j] = (up - down) / (2.0 * fd_step);
  }
  return grad;
}

ParamVector InitialParams(const AnsatzSpec& spec, std::uint64_t seed) {
  Rng rng = Rng(seed).Split(kInitStream);
  std::vector<double> values(ParamCount(spec));
  for (double& v : values) v = rng.Uniform(-std::numbers::pi, std::numbers::pi);
  return ParamVector(std::move(values));
}

TrainReport Train(const AnsatzSpec& spec, const LabeledDataset& data, const TrainConfig& config,
                  const std::optional<ParamVector>& init) {
  spec.Validate();
  config.Validate();
  CheckDataset(spec, data);
  ParamVector start = init ? *init : InitialParams(spec, config.seed);
  CheckParamCount(spec, start.size());

  Objective objective;
  if (config.gradient == GradientMode::kAnalytic) {
    objective = [&](std::span<const double> x, std::span<double> grad) {
      return LossAndGradient(spec, x, data, grad);
    };
  } else {
    objective = [&](std::span<const double> x, std::span<double> grad) {
      const ParamVector p(std::vector<double>(x.begin(), x.end()));
      const auto g = Gradient(spec, p, data, GradientMode::kFiniteDifference, config.fd_step);
      std::copy(g.begin(), g.end(), grad.begin());
      return DatasetLoss(spec, p, data);
    };
  }

  const auto t0 = std::chrono::steady_clock::now();
  OptimizeResult result;
  if (config.optimizer == OptimizerKind::kLbfgs) {
    LbfgsOptions options;
    options.max_iterations = config.max_iterations;
    result = MinimizeLbfgs(objective, start.values(), options);
  } else {
    AdamOptions options;
    options.iterations = config.max_iterations;
    options.learning_rate = config.learning_rate;
    options.keep_best = true;
    result = MinimizeAdam(objective, start.values(), options);
  }
  const auto t1 = std::chrono::steady_clock::now();

  TrainReport report;
  report.params = ParamVector(std::move(result.x));
  report.loss_history = std::move(result.history);
  report.iterations = result.iterations;
  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

int Predict(const AnsatzSpec& spec, const ParamVector& params, std::span<const double> features,
            const ClassifierConfig& cfg) {
  return Prob0(Forward(spec, params, features)) > cfg.threshold ? 0 : 1;
}

std::vector<int> PredictAll(const AnsatzSpec& spec, const ParamVector& params,
                            const LabeledDataset& data, const ClassifierConfig& cfg) {
  std::vector<int> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = Predict(spec, params, data.Row(i), cfg);
  return out;
}

}  // namespace sqnn
