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

// Fidelity loss, its gradient, the training loop and the threshold decision
// rule for single-qubit classifiers.
//
// Class 0 is trained towards |0> and class 1 towards |1>. The dataset loss is
// the unnormalized sum over samples of 1 - |<label state|psi(x)>|^2.

#ifndef SQNN_TRAINING_H_
#define SQNN_TRAINING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sqnn/ansatz.h"
#include "sqnn/data.h"
#include "sqnn/quantum.h"

namespace sqnn {

enum class OptimizerKind { kLbfgs, kAdam };
enum class GradientMode { kAnalytic, kFiniteDifference };

std::string_view ToString(OptimizerKind kind);
std::string_view ToString(GradientMode mode);
OptimizerKind ParseOptimizerKind(std::string_view name);
GradientMode ParseGradientMode(std::string_view name);

struct ClassifierConfig {
  // Predict class 0 iff P(0) > threshold.
  double threshold = 0.5;

  // Throws std::invalid_argument unless 0 < threshold < 1.
  void Validate() const;
};

struct TrainConfig {
  OptimizerKind optimizer = OptimizerKind::kLbfgs;
  int max_iterations = 50;
  double learning_rate = 0.05;  // Adam only
  GradientMode gradient = GradientMode::kAnalytic;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument unless max_iterations >= 1,
  // learning_rate > 0 and fd_step in (0, 1e-2].
  void Validate() const;
};

struct TrainReport {
  ParamVector params;
  // Entry 0 is the loss at the initial parameters, then one per iteration.
  std::vector<double> loss_history;
  int iterations = 0;
  double wall_seconds = 0.0;
};

// |0> for label 0, |1> for label 1. Throws std::invalid_argument otherwise.
QubitState LabelState(int label);

// Sum with pairwise (cascade) summation.
double PairwiseSum(std::span<const double> values);

double SampleLoss(const AnsatzSpec& spec, const ParamVector& params,
                  std::span<const double> features, int label);

// Throws std::invalid_argument for an empty dataset.
double DatasetLoss(const AnsatzSpec& spec, const ParamVector& params, const LabeledDataset& data);

// Gradient of DatasetLoss. Analytic mode propagates derivatives of each gate
// angle through the 2x2 products; finite-difference mode uses central
// differences with step fd_step.
std::vector<double> Gradient(const AnsatzSpec& spec, const ParamVector& params,
                             const LabeledDataset& data,
                             GradientMode mode = GradientMode::kAnalytic, double fd_step = 1e-5);

// DatasetLoss and its analytic gradient in a single pass. grad must have
// ParamCount(spec) entries.
double LossAndGradient(const AnsatzSpec& spec, std::span<const double> params,
                       const LabeledDataset& data, std::span<double> grad);

// I.i.d. uniform on [-pi, pi], deterministic in seed.
ParamVector InitialParams(const AnsatzSpec& spec, std::uint64_t seed);

// Fits params to data. Starts from init if given, else InitialParams(spec,
// config.seed). The returned params have loss <= loss_history[0]. Throws
// TrainingError if the loss becomes non-finite.
TrainReport Train(const AnsatzSpec& spec, const LabeledDataset& data, const TrainConfig& config,
                  const std::optional<ParamVector>& init = std::nullopt);

int Predict(const AnsatzSpec& spec, const ParamVector& params, std::span<const double> features,
            const ClassifierConfig& cfg = {});

std::vector<int> PredictAll(const AnsatzSpec& spec, const ParamVector& params,
                            const LabeledDataset& data, const ClassifierConfig& cfg = {});

}  // namespace sqnn

#endif  // SQNN_TRAINING_H_
