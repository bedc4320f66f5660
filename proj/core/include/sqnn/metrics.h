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

#ifndef SQNN_METRICS_H_
#define SQNN_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>

namespace sqnn {

// Binary confusion counts; class 1 is the positive class.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + tn + fp + fn; }

  // Exchanges the roles of the two classes.
  ConfusionMatrix Swapped() const { return {tn, tp, fn, fp}; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// Throws std::invalid_argument on length mismatch or values outside {0, 1}.
ConfusionMatrix Confusion(std::span<const int> predictions, std::span<const int> labels);

// Each returns std::nullopt when its denominator is zero.
std::optional<double> Accuracy(const ConfusionMatrix& cm);
std::optional<double> Precision(const ConfusionMatrix& cm);
std::optional<double> Recall(const ConfusionMatrix& cm);

}  // namespace sqnn

#endif  // SQNN_METRICS_H_
