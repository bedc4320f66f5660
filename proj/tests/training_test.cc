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

#include "sqnn/training.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "sqnn/data.h"

namespace sqnn {
namespace {

constexpr double kPi = std::numbers::pi;

LabeledDataset RandomData(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  LabeledDataset d(2);
  for (std::size_t i = 0; i < n; ++i) {
    const double x[2] = {u(gen), u(gen)};
    d.Add(x, static_cast<int>(gen() & 1), i);
  }
  return d;
}

std::vector<double> RandomParams(const AnsatzSpec& spec, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<double> p(ParamCount(spec));
  for (double& v : p) v = u(gen);
  return p;
}

// Central differences of the summed per-sample losses, computed here without
// the library's gradient code.
std::vector<double> CentralDifference(const AnsatzSpec& spec, std::vector<double> p,
                                      const LabeledDataset& data, double h) {
  auto loss = [&](const std::vector<double>& q) {
    double s = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
      s += 1 - PureFidelity(Forward(spec, ParamVector(q), data.Row(i)), LabelState(data.Label(i)));
    }
    return s;
  };
  std::vector<double> g(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double v = p[k];
    p[k] = v + h;
    const double up = loss(p);
    p[k] = v - h;
    const double down = loss(p);
    p[k] = v;
    g[k] = (up - down) / (2 * h);
  }
  return g;
}

double MaxRelativeError(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max({std::abs(a[i]), std::abs(b[i]), 1e-2}));
  }
  return worst;
}

TEST(LabelStateTest, Bijection) {
  EXPECT_EQ(Prob0(LabelState(0)), 1.0);
  EXPECT_EQ(Prob1(LabelState(1)), 1.0);
  EXPECT_THROW(LabelState(2), std::invalid_argument);
}

TEST(SampleLossTest, Examples) {
  const AnsatzSpec unitary{LayerKind::kUnitary, 1, PrepKind::kNone};
  const ParamVector zero({0, 0, 0});
  const double origin[2] = {0, 0};
  EXPECT_DOUBLE_EQ(SampleLoss(unitary, zero, origin, 0), 0.0);
  EXPECT_DOUBLE_EQ(SampleLoss(unitary, zero, origin, 1), 1.0);
  // U(pi/2, 0, 0) on |0> is (|0> + |1>)/sqrt2.
  const ParamVector half({kPi / 2, 0, 0});
  EXPECT_NEAR(SampleLoss(unitary, half, origin, 0), 0.5, 1e-15);
  EXPECT_NEAR(SampleLoss(unitary, half, origin, 1), 0.5, 1e-15);
}

TEST(DatasetLossTest, EmptyThrows) {
  const AnsatzSpec spec{LayerKind::kUat, 1, PrepKind::kNone};
  EXPECT_THROW(DatasetLoss(spec, ParamVector(std::vector<double>(5, 0.0)), LabeledDataset(2)),
               std::invalid_argument);
}

TEST(DatasetLossTest, LinearInRepeatedPoints) {
  const AnsatzSpec spec{LayerKind::kUat, 2, PrepKind::kTrainableU};
  std::mt19937_64 gen(5);
  const ParamVector p(RandomParams(spec, gen));
  const double x[2] = {0.3, -0.4};
  const double f = PureFidelity(Forward(spec, p, x), LabelState(1));
  LabeledDataset d(2);
  for (int i = 0; i < 7; ++i) d.Add(x, 1, i);
  EXPECT_NEAR(DatasetLoss(spec, p, d), 7 * (1 - f), 1e-13);
}

TEST(DatasetLossTest, MatchesPerSampleSum) {
  const AnsatzSpec spec{LayerKind::kCompressedUnitary, 2, PrepKind::kHadamard};
  const ParamVector p({0.1, -0.2, 0.3, 0.4, -0.5, 0.6, 0.7, 0.8, -0.9, 1.0, 1.1, -1.2});
  LabeledDataset d(2);
  const double pts[4][2] = {{0.5, 0.5}, {-0.5, 0.25}, {0.0, -1.0}, {0.9, 0.1}};
  double expected = 0;
  for (int i = 0; i < 4; ++i) {
    d.Add(pts[i], i % 2, i);
    expected += 1 - PureFidelity(Forward(spec, p, pts[i]), LabelState(i % 2));
  }
  EXPECT_NEAR(DatasetLoss(spec, p, d), expected, 1e-14);
  EXPECT_GE(DatasetLoss(spec, p, d), 0.0);
  EXPECT_LE(DatasetLoss(spec, p, d), 4.0);
}

TEST(DatasetLossTest, PermutationInvariant) {
  const AnsatzSpec spec{LayerKind::kUat, 3, PrepKind::kNone};
  std::mt19937_64 gen(8);
  const ParamVector p(RandomParams(spec, gen));
  const LabeledDataset d = RandomData(257, 3);
  std::vector<std::size_t> order(d.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), gen);
  LabeledDataset shuffled(2);
  for (std::size_t i : order) shuffled.Add(d.Row(i), d.Label(i), d.RowId(i));
  EXPECT_NEAR(DatasetLoss(spec, p, d), DatasetLoss(spec, p, shuffled), 1e-9);
}

TEST(PairwiseSumTest, MatchesNaiveOnIntegers) {
  std::vector<double> v;
  double naive = 0;
  for (int i = 0; i < 1001; ++i) {
    v.push_back(i);
    naive += i;
  }
  EXPECT_EQ(PairwiseSum(v), naive);
  EXPECT_EQ(PairwiseSum({}), 0.0);
}

class GradientOracleTest : public ::testing::TestWithParam<std::tuple<LayerKind, PrepKind>> {};

TEST_P(GradientOracleTest, AnalyticMatchesCentralDifference) {
  const auto [kind, prep] = GetParam();
  std::mt19937_64 gen(100 + static_cast<int>(kind) * 10 + static_cast<int>(prep));
  for (int trial = 0; trial < 20; ++trial) {
    const AnsatzSpec spec{kind, 1 + trial % 4, prep};
    const std::vector<double> p = RandomParams(spec, gen);
    const LabeledDataset data = RandomData(10, gen());
    const std::vector<double> analytic = Gradient(spec, ParamVector(p), data, GradientMode::kAnalytic);
    const std::vector<double> oracle = CentralDifference(spec, p, data, 1e-5);
    ASSERT_EQ(analytic.size(), ParamCount(spec));
    EXPECT_LE(MaxRelativeError(analytic, oracle), 1e-5) << "trial " << trial;
    // The library's own finite-difference mode follows the same recipe.
    const std::vector<double> fd = Gradient(spec, ParamVector(p), data, GradientMode::kFiniteDifference, 1e-5);
    EXPECT_LE(MaxRelativeError(fd, oracle), 1e-7);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllKinds, GradientOracleTest,
    ::testing::Combine(::testing::Values(LayerKind::kUnitary, LayerKind::kCompressedUnitary, LayerKind::kUat),
                       ::testing::Values(PrepKind::kNone, PrepKind::kHadamard, PrepKind::kTrainableU)));

TEST(GradientTest, StationaryAtPerfectFit) {
  const AnsatzSpec spec{LayerKind::kUat, 2, PrepKind::kNone};
  LabeledDataset d(2);
  const double origin[2] = {0, 0};
  d.Add(origin, 0, 0);
  for (double g : Gradient(spec, ParamVector(std::vector<double>(10, 0.0)), d)) EXPECT_NEAR(g, 0.0, 1e-6);
}

TEST(GradientTest, ScalarDerivativeInPhi) {
  const AnsatzSpec spec{LayerKind::kUat, 1, PrepKind::kNone};
  std::vector<double> p = {0.4, -0.3, 0.9, 0.2, 0.7};
  LabeledDataset d(2);
  const double x[2] = {0.6, -0.2};
  d.Add(x, 1, 0);
  // Rz leaves |0> alone, so prob0 = cos^2(phi) and the loss is 1 - sin^2(phi).
  const double phi = p[4];
  const double exact = -2 * std::sin(phi) * std::cos(phi);
  EXPECT_NEAR(Gradient(spec, ParamVector(p), d)[4], exact, 1e-12);
  const double h = 1e-5;
  auto f = [&](double v) {
    p[4] = v;
    return DatasetLoss(spec, ParamVector(p), d);
  };
  EXPECT_NEAR((f(phi + h) - f(phi - h)) / (2 * h), exact, 1e-9);
}

TEST(ConfigTest, Validation) {
  TrainConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.fd_step = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.fd_step = 0.02;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.fd_step = 1e-2;
  EXPECT_NO_THROW(c.Validate());
  c.max_iterations = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  EXPECT_THROW((ClassifierConfig{0.0}).Validate(), std::invalid_argument);
  EXPECT_THROW((ClassifierConfig{1.0}).Validate(), std::invalid_argument);
  EXPECT_EQ(ParseOptimizerKind("adam"), OptimizerKind::kAdam);
  EXPECT_EQ(ParseGradientMode(ToString(GradientMode::kFiniteDifference)), GradientMode::kFiniteDifference);
}

TEST(InitTest, DeterministicAndInRange) {
  const AnsatzSpec spec{LayerKind::kUat, 5, PrepKind::kTrainableU};
  const ParamVector a = InitialParams(spec, 42);
  EXPECT_EQ(a, InitialParams(spec, 42));
  EXPECT_NE(a, InitialParams(spec, 43));
  for (double v : a.values()) {
    EXPECT_GE(v, -kPi);
    EXPECT_LE(v, kPi);
  }
}

// Points left of x1 = 0 are class 0, right of it class 1.
LabeledDataset SeparableToy() {
  LabeledDataset d(2);
  const double xs[5] = {0.3, 0.45, 0.6, 0.75, 0.9};
  for (int i = 0; i < 5; ++i) {
    const double a[2] = {-xs[i], 0.1 * i - 0.2};
    const double b[2] = {xs[i], 0.2 - 0.1 * i};
    d.Add(a, 0, 2 * i);
    d.Add(b, 1, 2 * i + 1);
  }
  return d;
}

double Accuracy(const AnsatzSpec& spec, const ParamVector& p, const LabeledDataset& d) {
  const std::vector<int> pred = PredictAll(spec, p, d);
  int ok = 0;
  for (std::size_t i = 0; i < d.size(); ++i) ok += pred[i] == d.Label(i);
  return static_cast<double>(ok) / d.size();
}

TEST(TrainTest, SeparableToyReachesPerfectAccuracy) {
  const AnsatzSpec spec{LayerKind::kUnitary, 1, PrepKind::kNone};
  const LabeledDataset d = SeparableToy();
  // A perfect setting exists: grid search over the three trainable angles.
  bool found = false;
  for (int i = 0; i < 24 && !found; ++i) {
    for (int j = 0; j < 24 && !found; ++j) {
      for (int k = 0; k < 24 && !found; ++k) {
        const ParamVector p({i * kPi / 12, j * kPi / 12 - kPi, k * kPi / 12 - kPi});
        found = Accuracy(spec, p, d) == 1.0;
      }
    }
  }
  ASSERT_TRUE(found);
  TrainConfig cfg;
  cfg.seed = 1;
  const TrainReport r = Train(spec, d, cfg);
  EXPECT_EQ(Accuracy(spec, r.params, d), 1.0);
}

TEST(TrainTest, ReportIsWellFormed) {
  const LabeledDataset d = RandomData(30, 4);
  for (OptimizerKind opt : {OptimizerKind::kLbfgs, OptimizerKind::kAdam}) {
    for (GradientMode mode : {GradientMode::kAnalytic, GradientMode::kFiniteDifference}) {
      const AnsatzSpec spec{LayerKind::kUat, 2, PrepKind::kTrainableU};
      TrainConfig cfg;
      cfg.optimizer = opt;
      cfg.gradient = mode;
      cfg.max_iterations = 20;
      cfg.seed = 9;
      const TrainReport r = Train(spec, d, cfg);
      ASSERT_FALSE(r.loss_history.empty());
      EXPECT_EQ(r.params.size(), ParamCount(spec));
      for (double l : r.loss_history) {
        EXPECT_TRUE(std::isfinite(l));
        EXPECT_GE(l, 0.0);
      }
      EXPECT_LE(*std::min_element(r.loss_history.begin(), r.loss_history.end()), r.loss_history.front());
      EXPECT_LE(DatasetLoss(spec, r.params, d), r.loss_history.front() + 1e-12);
    }
  }
}

TEST(TrainTest, SingleIterationBudget) {
  const AnsatzSpec spec{LayerKind::kUat, 1, PrepKind::kNone};
  TrainConfig cfg;
  cfg.max_iterations = 1;
  const TrainReport r = Train(spec, RandomData(10, 1), cfg);
  EXPECT_GE(r.loss_history.size(), 1u);
  EXPECT_LE(r.loss_history.size(), 2u);
}

TEST(TrainTest, BitwiseReproducible) {
  const AnsatzSpec spec{LayerKind::kUat, 3, PrepKind::kTrainableU};
  const LabeledDataset d = GenCircle(100, 5);
  TrainConfig cfg;
  cfg.seed = 77;
  const TrainReport a = Train(spec, d, cfg);
  const TrainReport b = Train(spec, d, cfg);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.loss_history, b.loss_history);
  cfg.seed = 78;
  EXPECT_NE(Train(spec, d, cfg).params, a.params);
}

TEST(TrainTest, RejectsMismatchedInit) {
  const AnsatzSpec spec{LayerKind::kUat, 1, PrepKind::kNone};
  EXPECT_THROW(Train(spec, RandomData(4, 1), TrainConfig{}, ParamVector({1.0})), std::invalid_argument);
}

TEST(PredictTest, DecisionRule) {
  const AnsatzSpec spec{LayerKind::kUnitary, 1, PrepKind::kNone};
  const double origin[2] = {0, 0};
  EXPECT_EQ(Predict(spec, ParamVector({0, 0, 0}), origin), 0);
  EXPECT_EQ(Predict(spec, ParamVector({kPi, 0, 0}), origin), 1);
  // Strict inequality: prob0 equal to the threshold goes to class 1.
  const ParamVector half({kPi / 2, 0.3, -0.1});
  const double p0 = Prob0(Forward(spec, half, origin));
  EXPECT_EQ(Predict(spec, half, origin, ClassifierConfig{p0}), 1);
  EXPECT_EQ(Predict(spec, half, origin, ClassifierConfig{std::nextafter(p0, 0.0)}), 0);
}

TEST(PredictTest, GlobalPhaseInvariant) {
  // alpha only adds a phase when the state entering Rz is |0>.
  const AnsatzSpec spec{LayerKind::kUat, 1, PrepKind::kNone};
  const double x[2] = {0.0, 0.0};
  for (double alpha : {0.0, 0.7, -2.1, 3.0}) {
    const ParamVector p({0.5, 0.5, 0.0, alpha, 0.6});
    EXPECT_EQ(Predict(spec, p, x), Predict(spec, ParamVector({0.5, 0.5, 0.0, 0.0, 0.6}), x));
    EXPECT_NEAR(PureFidelity(Forward(spec, p, x), Forward(spec, ParamVector({0.5, 0.5, 0.0, 0.0, 0.6}), x)), 1.0,
                1e-14);
  }
}

}  // namespace
}  // namespace sqnn
