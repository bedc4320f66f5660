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

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace sqnn {
namespace {

TEST(ConfusionTest, PerfectAndAllOnes) {
  const std::vector<int> labels = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
  EXPECT_EQ(Confusion(labels, labels), (ConfusionMatrix{5, 5, 0, 0}));
  const std::vector<int> ones(10, 1);
  EXPECT_EQ(Confusion(ones, labels), (ConfusionMatrix{5, 0, 5, 0}));
}

TEST(ConfusionTest, Errors) {
  const std::vector<int> a = {0, 1}, b = {0, 1, 1}, c = {0, 2};
  EXPECT_THROW(Confusion(a, b), std::invalid_argument);
  EXPECT_THROW(Confusion(c, a), std::invalid_argument);
}

TEST(MetricsTest, ReferenceConfusionRow) {
  const ConfusionMatrix cm{268, 327, 62, 3};
  EXPECT_EQ(cm.total(), 660u);
  EXPECT_NEAR(*Accuracy(cm), 0.902, 5e-4);
  EXPECT_NEAR(*Precision(cm), 0.81, 5e-3);
  EXPECT_NEAR(*Recall(cm), 0.99, 5e-3);
}

TEST(MetricsTest, UndefinedIsSignalled) {
  EXPECT_FALSE(Precision({0, 10, 0, 3}).has_value());
  EXPECT_FALSE(Recall({0, 10, 4, 0}).has_value());
  EXPECT_FALSE(Accuracy({}).has_value());
  EXPECT_EQ(*Accuracy({4, 6, 0, 0}), 1.0);
  EXPECT_EQ(*Precision({4, 6, 0, 0}), 1.0);
  EXPECT_EQ(*Recall({4, 6, 0, 0}), 1.0);
}

TEST(MetricsTest, RationalAccuracyAndDuality) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<std::size_t> u(1, 500);
  for (int i = 0; i < 200; ++i) {
    const ConfusionMatrix cm{u(gen), u(gen), u(gen), u(gen)};
    EXPECT_EQ(*Accuracy(cm), static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total()));
    const ConfusionMatrix s = cm.Swapped();
    // Precision of the swapped convention is the negative predictive value.
    EXPECT_EQ(*Precision(s), static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fn));
    EXPECT_EQ(*Recall(s), static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp));
    EXPECT_EQ(*Accuracy(s), *Accuracy(cm));
    EXPECT_EQ(s.Swapped(), cm);
  }
}

}  // namespace
}  // namespace sqnn
