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

// Experiment configuration, trained-model records and the shared helpers the
// CLI verbs are built from.

#ifndef SQNN_CLI_EXPERIMENT_H_
#define SQNN_CLI_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sqnn/ansatz.h"
#include "sqnn/classical.h"
#include "sqnn/data.h"
#include "sqnn/metrics.h"
#include "sqnn/training.h"

namespace sqnn::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Usage or validation problem; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DataSourceKind { kCircle, kFraudCsv, kFiles };

struct DataSource {
  DataSourceKind kind = DataSourceKind::kCircle;
  std::size_t train_size = 200;
  std::size_t test_size = 2000;
  std::filesystem::path csv;         // kFraudCsv
  std::filesystem::path train_file;  // kFiles
  std::filesystem::path test_file;   // kFiles, optional
};

struct QuantumModelSpec {
  AnsatzSpec ansatz;
  TrainConfig train;
  ClassifierConfig classifier;
};

struct ClassicalModelSpec {
  MlpSpec mlp;
  int epochs = 150;
  double learning_rate = 0.05;
};

using ModelSpec = std::variant<QuantumModelSpec, ClassicalModelSpec>;

struct ExperimentConfig {
  std::uint64_t seed = 0;
  DataSource data;
  ModelSpec model = QuantumModelSpec{};
  std::filesystem::path out_dir = "out";
};

// Reads the INI-style config (sections [run], [data], [model], [train],
// [classifier]; ';' starts a comment). Unknown keys are rejected. Throws
// UsageError.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
// Renders a config that LoadExperimentConfig reads back to the same value.
std::string RenderExperimentConfig(const ExperimentConfig& config);

// A trained classifier of either family.
struct TrainedModel {
  struct Quantum {
    AnsatzSpec spec;
    ParamVector params;
    ClassifierConfig classifier;
  };
  struct Classical {
    MlpSpec spec;
    MlpParams params;
  };
  std::variant<Quantum, Classical> model;

  std::size_t InputDim() const;
  std::size_t ParamCount() const;
  int Predict(std::span<const double> features) const;
  std::vector<int> PredictAll(const LabeledDataset& data) const;
};

struct SplitMetrics {
  ConfusionMatrix confusion;
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
};

SplitMetrics Evaluate(const TrainedModel& model, const LabeledDataset& data);

struct TrainOutcome {
  TrainedModel model;
  std::vector<double> loss_history;
  int iterations = 0;
  double wall_seconds = 0.0;
};

// Trains the configured model family on train with the given seed.
TrainOutcome TrainModel(const ModelSpec& spec, const LabeledDataset& train, std::uint64_t seed);

// Circle datasets for a seed: train and test come from separate streams.
TrainTestSplit CircleSplit(std::size_t n_train, std::size_t n_test, std::uint64_t seed);

// Loads the CSV, fits PCA on every row and projects all rows to 2-D.
struct FraudProjection {
  PcaModel pca;
  LabeledDataset full;
};
FraudProjection ProjectFraudCsv(const std::filesystem::path& csv);

}  // namespace sqnn::cli

#endif  // SQNN_CLI_EXPERIMENT_H_
