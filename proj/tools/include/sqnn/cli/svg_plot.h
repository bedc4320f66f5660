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

#ifndef SQNN_CLI_SVG_PLOT_H_
#define SQNN_CLI_SVG_PLOT_H_

#include <string>

#include "sqnn/cli/experiment.h"

namespace sqnn::cli {

inline constexpr int kPlotGridSize = 200;

struct PlotStats {
  std::size_t points = 0;
  std::size_t misclassified = 0;
  // Grid cells predicted as class 0 / class 1; zero when no model is given.
  std::size_t cells_class0 = 0;
  std::size_t cells_class1 = 0;
};

// Standalone SVG scatter plot of a 2-D dataset (blue: class 0, green:
// class 1). With a model, the background is shaded by its prediction on a
// kPlotGridSize x kPlotGridSize grid and misclassified points get a red
// ring. Throws UsageError unless data.dim() == 2.
std::string RenderDecisionSvg(const LabeledDataset& data, const TrainedModel* model,
                              PlotStats* stats = nullptr);

}  // namespace sqnn::cli

#endif  // SQNN_CLI_SVG_PLOT_H_
