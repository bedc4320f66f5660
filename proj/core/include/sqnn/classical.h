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

// One-hidden-layer sigmoid networks used as the classical reference models.

#ifndef SQNN_CLASSICAL_H_
#define SQNN_CLASSICAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sqnn/data.h"

namespace sqnn {

struct MlpSpec {
  int input_dim = 2;
  int hidden_units = 3;

  // Throws std::invalid_argument unless both sizes are positive.
  void Validate() const;

  friend bool operator==(const MlpSpec&, const MlpSpec&) = default;
};

struct MlpParams {
  std::vector<double> hidden_weights;  // hidden_units x input_dim, row-major
  std::vector<double> hidden_biases;   // hidden_units
  std::vector<double> output_weights;  // hidden_units
  double output_bias = 0.0;

  static MlpParams Zeros(const MlpSpec& spec);

  // Concatenation in member order; the layout used by gradients and files.
  std::vector<double> Flatten() const;
  // Throws std::invalid_argument if values has the wrong length.
  static MlpParams Unflatten(const MlpSpec& spec, std::span<const double> values);

  friend bool operator==(const MlpParams&, const MlpParams&) = default;
};

// hidden_units * (input_dim + 1) + hidden_units + 1
std::size_t MlpParamCount(const MlpSpec& spec);

// Weights uniform on [-1, 1] / sqrt(fan_in), biases zero; deterministic in seed.
MlpParams MlpInitialParams(const MlpSpec& spec, std::uint64_t seed);

// sigmoid(w_out . sigmoid(W x + b) + b_out), kept strictly inside (0, 1).
double MlpForward(const MlpSpec& spec, const MlpParams& params, std::span<const double> features);

int MlpPredict(const MlpSpec& spec, const MlpParams& params, std::span<const double> features);
std::vector<int> MlpPredictAll(const MlpSpec& spec, const MlpParams& params, const LabeledDataset& data);

// Mean squared error against the {0, 1} labels.
double MlpLoss(const MlpSpec& spec, const MlpParams& params, const LabeledDataset& data);

// MlpLoss and its backpropagated gradient in Flatten() order.
double MlpLossAndGradient(const MlpSpec& spec, std::span<const double> flat_params,
                          const LabeledDataset& data, std::span<double> grad);

struct MlpTrainResult {
  MlpParams params;
  // Entry 0 is the initial loss, then one per epoch.
  std::vector<double> loss_history;
};

// Full-batch Adam (beta1 0.9, beta2 0.999, eps 1e-8) for the given number of
// epochs. Throws std::invalid_argument for empty data and TrainingError on a
// non-finite loss.
MlpTrainResult MlpTrain(const MlpSpec& spec, const LabeledDataset& data, int epochs,
                        std::uint64_t seed, double learning_rate = 0.05);

}  // namespace sqnn

#endif  // SQNN_CLASSICAL_H_
