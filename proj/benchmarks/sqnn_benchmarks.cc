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

#include <benchmark/benchmark.h>

#include "sqnn/ansatz.h"
#include "sqnn/classical.h"
#include "sqnn/data.h"
#include "sqnn/training.h"

namespace sqnn {
namespace {

AnsatzSpec SpecFor(int64_t kind, int64_t layers) {
  return {static_cast<LayerKind>(kind), static_cast<int>(layers), PrepKind::kTrainableU};
}

void BM_Forward(benchmark::State& state) {
  const AnsatzSpec spec = SpecFor(state.range(0), state.range(1));
  const ParamVector p = InitialParams(spec, 1);
  const double x[2] = {0.3, -0.6};
  for (auto _ : state) benchmark::DoNotOptimize(Forward(spec, p, x));
}
BENCHMARK(BM_Forward)->ArgsProduct({{0, 1, 2}, {1, 3, 5}});

void BM_GradientAnalytic(benchmark::State& state) {
  const AnsatzSpec spec = SpecFor(state.range(0), state.range(1));
  const ParamVector p = InitialParams(spec, 1);
  const LabeledDataset data = GenCircle(200, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Gradient(spec, p, data, GradientMode::kAnalytic));
}
BENCHMARK(BM_GradientAnalytic)->ArgsProduct({{0, 1, 2}, {1, 3, 5}})->Unit(benchmark::kMicrosecond);

void BM_GradientFiniteDifference(benchmark::State& state) {
  const AnsatzSpec spec = SpecFor(state.range(0), state.range(1));
  const ParamVector p = InitialParams(spec, 1);
  const LabeledDataset data = GenCircle(200, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Gradient(spec, p, data, GradientMode::kFiniteDifference, 1e-5));
  }
}
BENCHMARK(BM_GradientFiniteDifference)->ArgsProduct({{0, 1, 2}, {1, 3, 5}})->Unit(benchmark::kMicrosecond);

void BM_TrainCircle(benchmark::State& state) {
  const AnsatzSpec spec{static_cast<LayerKind>(state.range(0)), 3, PrepKind::kNone};
  const LabeledDataset data = GenCircle(200, 1);
  TrainConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(Train(spec, data, cfg));
}
BENCHMARK(BM_TrainCircle)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_MlpTrain(benchmark::State& state) {
  const MlpSpec spec{2, static_cast<int>(state.range(0))};
  const LabeledDataset data = GenCircle(400, 2);
  for (auto _ : state) benchmark::DoNotOptimize(MlpTrain(spec, data, 150, 1));
}
BENCHMARK(BM_MlpTrain)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GenCircle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(GenCircle(static_cast<std::size_t>(state.range(0)), 3));
}
BENCHMARK(BM_GenCircle)->Arg(200)->Arg(2000);

}  // namespace
}  // namespace sqnn

BENCHMARK_MAIN();
