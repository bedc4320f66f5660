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

// Unconstrained minimizers over a flat parameter vector.

#ifndef SQNN_OPTIMIZE_H_
#define SQNN_OPTIMIZE_H_

#include <functional>
#include <span>
#include <vector>

namespace sqnn {

// Returns f(x) and writes the gradient into grad (same length as x).
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct OptimizeResult {
  std::vector<double> x;
  // history[0] is f(x0); one entry is appended per completed iteration.
  std::vector<double> history;
  int iterations = 0;
};

struct LbfgsOptions {
  int max_iterations = 50;
  int memory = 10;
  // Strong Wolfe constants.
  double c1 = 1e-4;
  double c2 = 0.9;
  // Stop once ||grad||_inf falls to this value.
  double gradient_tolerance = 1e-8;
  int max_line_search_evaluations = 30;
};

// Limited-memory BFGS with a bracketing/zoom strong-Wolfe line search.
// Every accepted step satisfies the sufficient-decrease condition, so the
// history is non-increasing. Stops early if the line search cannot make
// progress. Throws TrainingError when f returns a non-finite value.
OptimizeResult MinimizeLbfgs(const Objective& f, std::vector<double> x0,
                             const LbfgsOptions& options);

struct AdamOptions {
  int iterations = 50;
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // Return the iterate with the lowest recorded value instead of the last.
  bool keep_best = false;
};

// history[k] = f(x_k) for k = 0..iterations. Throws TrainingError when f
// returns a non-finite value.
OptimizeResult MinimizeAdam(const Objective& f, std::vector<double> x0, const AdamOptions& options);

}  // namespace sqnn

#endif  // SQNN_OPTIMIZE_H_
