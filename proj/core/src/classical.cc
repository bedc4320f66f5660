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

#include "sqnn/classical.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sqnn/optimize.h"
#include "sqnn/random.h"
#include "sqnn/training.h"

namespace sqnn {
namespace {

constexpr std::uint64_t kMlpInitStream = 0x6d6c70;  // "mlp"

double Sigmoid(double z) {
  const double s = z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
  return std::clamp(s, 0x1p-1000, 1.0 - 0x1p-53);
}

void CheckData(const MlpSpec& spec, const LabeledDataset& data) {
  if (data.empty()) throw std::invalid_argument("dataset is empty");
  if (data.dim() != static_cast<std::size_t>(spec.input_dim)) {
    throw std::invalid_argument("dataset has " + std::to_string(data.dim()) +
                                " features, network expects " + std::to_string(spec.input_dim));
  }
}

}  // namespace

void MlpSpec::Validate() const {
  if (input_dim < 1 || hidden_units < 1) {
    throw std::invalid_argument("MlpSpec: input_dim and hidden_units must be positive");
  }
}

MlpParams MlpParams::Zeros(const MlpSpec& spec) {
  spec.Validate();
  const auto h = static_cast<std::size_t>(spec.hidden_units);
  const auto d = static_cast<std::size_t>(spec.input_dim);
  return {std::vector<double>(h * d, 0.0), std::vector<double>(h, 0.0), std::vector<double>(h, 0.0), 0.0};
}

std::vector<double> MlpParams::Flatten() const {
  std::vector<double> out;
  out.reserve(hidden_weights.size() + hidden_biases.size() + output_weights.size() + 1);
  out.insert(out.end(), hidden_weights.begin(), hidden_weights.end());
  out.insert(out.end(), hidden_biases.begin(), hidden_biases.end());
  out.insert(out.end(), output_weights.begin(), output_weights.end());
  out.push_back(output_bias);
  return out;
}

MlpParams MlpParams::Unflatten(const MlpSpec& spec, std::span<const double> values) {
  if (values.size() != MlpParamCount(spec)) {
    throw std::invalid_argument("MlpParams: expected " + std::to_string(MlpParamCount(spec)) +
                                " values, got " + std::to_string(values.size()));
  }
  MlpParams p = Zeros(spec);
  auto it = values.begin();
  for (auto* part : {&p.hidden_weights, &p.hidden_biases, &p.output_weights}) {
    std::copy_n(it, part->size(), part->begin());
    it += static_cast<std::ptrdiff_t>(part->size());
  }
  p.output_bias = *it;
  return p;
}

std::size_t MlpParamCount(const MlpSpec& spec) {
  spec.Validate();
  const auto h = static_cast<std::size_t>(spec.hidden_units);
  return h * (static_cast<std::size_t>(spec.input_dim) + 1) + h + 1;
}

MlpParams MlpInitialParams(const MlpSpec& spec, std::uint64_t seed) {
  MlpParams p = MlpParams::Zeros(spec);
  Rng rng = Rng(seed).Split(kMlpInitStream);
  const double hidden_scale = 1.0 / std::sqrt(static_cast<double>(spec.input_dim));
  const double output_scale = 1.0 / std::sqrt(static_cast<double>(spec.hidden_units));
  for (double& w : p.hidden_weights) w = hidden_scale * rng.Uniform(-1.0, 1.0);
  for (double& w : p.output_weights) w = output_scale * rng.Uniform(-1.0, 1.0);
  return p;
}

double MlpForward(const MlpSpec& spec, const MlpParams& params, std::span<const double> features) {
  if (features.size() != static_cast<std::size_t>(spec.input_dim)) {
    throw std::invalid_argument("MlpForward: wrong input width");
  }
  const auto d = static_cast<std::size_t>(spec.input_dim);
  double z_out = params.output_bias;
  for (std::size_t j = 0; j < static_cast<std::size_t>(spec.hidden_units); ++j) {
    double z = params.hidden_biases[j];
    for (std::size_t i = 0; i < d; ++i) z += params.hidden_weights[j * d + i] * features[i];
    z_out += params.output_weights[j] * Sigmoid(z);
  }
  return Sigmoid(z_out);
}

int MlpPredict(const MlpSpec& spec, const MlpParams& params, std::span<const double> features) {
  return MlpForward(spec, params, features) > 0.5 ? 1 : 0;
}

std::vector<int> MlpPredictAll(const MlpSpec& spec, const MlpParams& params, const LabeledDataset& data) {
  std::vector<int> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = MlpPredict(spec, params, data.Row(i));
  return out;
}

double MlpLoss(const MlpSpec& spec, const MlpParams& params, const LabeledDataset& data) {
  CheckData(spec, data);
  std::vector<double> terms(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double e = MlpForward(spec, params, data.Row(i)) - data.Label(i);
    terms[i] = e * e;
  }
  return PairwiseSum(terms) / static_cast<double>(data.size());
}

double MlpLossAndGradient(const MlpSpec& spec, std::span<const double> flat_params,
                          const LabeledDataset& data, std::span<double> grad) {
  CheckData(spec, data);
  const MlpParams p = MlpParams::Unflatten(spec, flat_params);
  if (grad.size() != flat_params.size()) throw std::invalid_argument("MlpLossAndGradient: grad size");
  std::fill(grad.begin(), grad.end(), 0.0);

  const auto h = static_cast<std::size_t>(spec.hidden_units);
  const auto d = static_cast<std::size_t>(spec.input_dim);
  const std::size_t off_hb = h * d;
  const std::size_t off_ow = off_hb + h;
  const std::size_t off_ob = off_ow + h;
  const double inv_m = 1.0 / static_cast<double>(data.size());

  std::vector<double> terms(data.size());
  std::vector<double> act(h);
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto x = data.Row(r);
    double z_out = p.output_bias;
    for (std::size_t j = 0; j < h; ++j) {
      double z = p.hidden_biases[j];
      for (std::size_t i = 0; i < d; ++i) z += p.hidden_weights[j * d + i] * x[i];
      act[j] = Sigmoid(z);
      z_out += p.output_weights[j] * act[j];
    }
    const double y = Sigmoid(z_out);
    const double err = y - data.Label(r);
    terms[r] = err * err;

    const double delta_out = 2.0 * err * y * (1.0 - y) * inv_m;
    grad[off_ob] += delta_out;
    for (std::size_t j = 0; j < h; ++j) {
      grad[off_ow + j] += delta_out * act[j];
      const double delta_h = delta_out * p.output_weights[j] * act[j] * (1.0 - act[j]);
      grad[off_hb + j] += delta_h;
      for (std::size_t i = 0; i < d; ++i) grad[j * d + i] += delta_h * x[i];
    }
  }
  return PairwiseSum(terms) * inv_m;
}

MlpTrainResult MlpTrain(const MlpSpec& spec, const LabeledDataset& data, int epochs, std::uint64_t seed,
                        double learning_rate) {
  spec.Validate();
  CheckData(spec, data);
  if (epochs < 0) throw std::invalid_argument("MlpTrain: epochs must be non-negative");
  const MlpParams init = MlpInitialParams(spec, seed);

  AdamOptions options;
  options.iterations = epochs;
  options.learning_rate = learning_rate;
  const Objective objective = [&](std::span<const double> x, std::span<double> grad) {
    return MlpLossAndGradient(spec, x, data, grad);
  };
  OptimizeResult result = MinimizeAdam(objective, init.Flatten(), options);
  return {MlpParams::Unflatten(spec, result.x), std::move(result.history)};
}

}  // namespace sqnn
