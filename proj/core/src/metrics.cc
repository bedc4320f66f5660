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

#include "sqnn/metrics.h"

#include <stdexcept>
#include <string>

namespace sqnn {
namespace {

std::optional<double> Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ConfusionMatrix Confusion(std::span<const int> predictions, std::span<const int> labels) {
  if (predictions.size() != labels.size()) {
    throw std::invalid_argument("Confusion: " + std::to_string(predictions.size()) +
                                " predictions for " + std::to_string(labels.size()) + " labels");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int p = predictions[i];
    const int y = labels[i];
    if ((p != 0 && p != 1) || (y != 0 && y != 1)) {
      throw std::invalid_argument("Confusion: values must be 0 or 1");
    }
    if (p == 1) {
      ++(y == 1 ? cm.tp : cm.fp);
    } else {
      ++(y == 0 ? cm.tn : cm.fn);
    }
  }
  return cm;
}

std::optional<double> Accuracy(const ConfusionMatrix& cm) { return Ratio(cm.tp + cm.tn, cm.total()); }
std::optional<double> Precision(const ConfusionMatrix& cm) { return Ratio(cm.tp, cm.tp + cm.fp); }
std::optional<double> Recall(const ConfusionMatrix& cm) { return Ratio(cm.tp, cm.tp + cm.fn); }

}  // namespace sqnn
