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

#include "sqnn/optimize.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "sqnn/errors.h"

namespace sqnn {
namespace {

double Rosenbrock(std::span<const double> x, std::span<double> g) {
  const double a = 1 - x[0], b = x[1] - x[0] * x[0];
  g[0] = -2 * a - 400 * x[0] * b;
  g[1] = 200 * b;
  return a * a + 100 * b * b;
}

double Quadratic(std::span<const double> x, std::span<double> g) {
  double f = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = static_cast<double>(i + 1);
    f += 0.5 * w * (x[i] - 1) * (x[i] - 1);
    g[i] = w * (x[i] - 1);
  }
  return f;
}

TEST(LbfgsTest, SolvesRosenbrock) {
  LbfgsOptions o;
  o.max_iterations = 200;
  const OptimizeResult r = MinimizeLbfgs(Rosenbrock, {-1.2, 1.0}, o);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
  EXPECT_LT(r.iterations, 200);
}

TEST(LbfgsTest, HistoryNonIncreasing) {
  const OptimizeResult r = MinimizeLbfgs(Rosenbrock, {-1.2, 1.0}, LbfgsOptions{});
  ASSERT_EQ(r.history.size(), static_cast<std::size_t>(r.iterations) + 1);
  for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
}

TEST(LbfgsTest, StopsAtStationaryPoint) {
  const OptimizeResult r = MinimizeLbfgs(Quadratic, {1.0, 1.0, 1.0}, LbfgsOptions{});
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.history.size(), 1u);
  const OptimizeResult q = MinimizeLbfgs(Quadratic, std::vector<double>(8, -3.0), LbfgsOptions{});
  for (double v : q.x) EXPECT_NEAR(v, 1.0, 1e-8);
}

TEST(LbfgsTest, NonFiniteAborts) {
  int calls = 0;
  auto f = [&](std::span<const double> x, std::span<double> g) {
    if (++calls > 4) return std::nan("");
    return Quadratic(x, g);
  };
  try {
    MinimizeLbfgs(f, {5.0, -5.0, 2.0}, LbfgsOptions{});
    FAIL() << "expected TrainingError";
  } catch (const TrainingError& e) {
    EXPECT_GE(e.iteration(), 0);
  }
}

TEST(AdamTest, ConvergesOnQuadratic) {
  AdamOptions o;
  o.iterations = 2000;
  o.learning_rate = 0.05;
  const OptimizeResult r = MinimizeAdam(Quadratic, {4.0, -2.0, 0.0}, o);
  for (double v : r.x) EXPECT_NEAR(v, 1.0, 1e-3);
  EXPECT_EQ(r.history.size(), 2001u);
}

TEST(AdamTest, KeepBestReturnsLowestSeen) {
  AdamOptions o;
  o.iterations = 100;
  o.learning_rate = 0.9;  // overshoots
  o.keep_best = true;
  const OptimizeResult r = MinimizeAdam(Quadratic, {3.0, 3.0}, o);
  std::vector<double> g(2);
  const double f = Quadratic(r.x, g);
  double best = r.history[0];
  for (double h : r.history) best = std::min(best, h);
  EXPECT_DOUBLE_EQ(f, best);
}

TEST(AdamTest, ZeroIterationsIsIdentity) {
  AdamOptions o;
  o.iterations = 0;
  const OptimizeResult r = MinimizeAdam(Quadratic, {3.0, 3.0}, o);
  EXPECT_EQ(r.x, (std::vector<double>{3.0, 3.0}));
  EXPECT_EQ(r.history.size(), 1u);
}

TEST(AdamTest, NonFiniteAborts) {
  int calls = 0;
  auto f = [&](std::span<const double> x, std::span<double> g) {
    const double v = Quadratic(x, g);
    return ++calls == 7 ? INFINITY : v;
  };
  try {
    MinimizeAdam(f, {5.0, -5.0}, AdamOptions{});
    FAIL() << "expected TrainingError";
  } catch (const TrainingError& e) {
    EXPECT_EQ(e.iteration(), 6);
  }
}

}  // namespace
}  // namespace sqnn
