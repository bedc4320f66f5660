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

// JSON records written by the CLI: trained models, training results and
// evaluation results. Doubles are written in shortest round-trip form so a
// record reproduces the model bit for bit.

#ifndef SQNN_CLI_RECORDS_H_
#define SQNN_CLI_RECORDS_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "sqnn/cli/experiment.h"

namespace sqnn::cli {

nlohmann::json ModelToJson(const TrainedModel& model);
// Accepts a bare model object or any record with a "model" member. Throws
// FormatError for malformed input.
TrainedModel ModelFromJson(const nlohmann::json& j);

nlohmann::json MetricsToJson(const SplitMetrics& m);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
// Pretty-printed with a trailing newline.
void WriteJsonFile(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace sqnn::cli

#endif  // SQNN_CLI_RECORDS_H_
