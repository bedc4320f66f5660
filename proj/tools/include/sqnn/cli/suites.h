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

// Benchmark suites regenerating the circle and fraud comparison tables.

#ifndef SQNN_CLI_SUITES_H_
#define SQNN_CLI_SUITES_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqnn/cli/experiment.h"

namespace sqnn::cli {

enum class Suite { kExp1, kExp2, kExp3, kFraud };

std::string_view ToString(Suite suite);
// Throws UsageError for unknown names.
Suite ParseSuite(std::string_view name);

// One table row: a model configuration plus the structural cells it must
// reproduce.
struct SuiteRow {
  std::string layer_type;
  std::string prep;
  int n_layers = 0;
  std::optional<int> expected_depth;  // unset for classical rows
  std::size_t expected_params = 0;
  ModelSpec model;
};

std::vector<SuiteRow> SuiteRows(Suite suite);

struct SeedRun {
  std::uint64_t seed = 0;
  std::string error;  // empty on success
  SplitMetrics train;
  SplitMetrics test;
  double final_loss = 0.0;

  bool ok() const { return error.empty(); }
};

struct RowResult {
  SuiteRow row;
  std::optional<int> depth;
  std::size_t params = 0;
  std::vector<SeedRun> runs;  // in seed order

  // Successful run with the highest test accuracy; earliest seed on ties.
  const SeedRun* Best() const;
  // Mean over successful runs; nullopt if none succeeded.
  std::optional<double> MeanTestAccuracy() const;
};

struct BenchmarkTable {
  Suite suite = Suite::kExp1;
  std::vector<RowResult> rows;
};

struct SuiteOptions {
  Suite suite = Suite::kExp1;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  // Fraud suite input: either the CSV or an already projected dataset.
  std::filesystem::path fraud_csv;
  std::optional<LabeledDataset> fraud_projected;
  int jobs = 1;
};

// Runs every (row, seed) pair. Failures are recorded per run and do not stop
// the suite. Throws std::logic_error if a row's parameter count or depth
// disagrees with its expected table cell.
BenchmarkTable RunSuite(const SuiteOptions& options);

// Checks the structural cells of every suite row; throws std::logic_error on
// the first mismatch.
void CheckSuiteStructure(const std::vector<SuiteRow>& rows);

// Aligned text table with per-seed, mean and best lines.
std::string RenderTableText(const BenchmarkTable& table);
// Same content as CSV.
std::string RenderTableCsv(const BenchmarkTable& table);

}  // namespace sqnn::cli

#endif  // SQNN_CLI_SUITES_H_
