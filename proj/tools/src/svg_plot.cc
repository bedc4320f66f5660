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

#include "sqnn/cli/svg_plot.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sqnn::cli {
namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 40.0;
constexpr std::array<const char*, 2> kPointColor = {"#1f77b4", "#2ca02c"};
constexpr std::array<const char*, 2> kRegionColor = {"#d6e6f4", "#d9f0d3"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string RenderDecisionSvg(const LabeledDataset& data, const TrainedModel* model, PlotStats* stats) {
  if (data.dim() != 2) {
    throw UsageError("plot needs 2-D data, dataset has " + std::to_string(data.dim()) + " features");
  }
  if (model && model->InputDim() != 2) throw UsageError("plot needs a model with 2 inputs");

  // Plot window: [-1, 1]^2 grown to cover every point.
  double lo = -1.0;
  double hi = 1.0;
  for (double v : data.features()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi - lo;
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  auto px = [&](double x) { return kMargin + (x - lo) * scale; };
  auto py = [&](double y) { return kCanvas - kMargin - (y - lo) * scale; };

  PlotStats local;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (model) {
    // One rect per horizontal run of equal predictions.
    const double cell = span / kPlotGridSize;
    const double cell_px = cell * scale;
    svg << "<g id=\"regions\" shape-rendering=\"crispEdges\">\n";
    std::array<double, 2> x{};
    for (int row = 0; row < kPlotGridSize; ++row) {
      x[1] = lo + (row + 0.5) * cell;
      int run_start = 0;
      int run_class = -1;
      for (int col = 0; col <= kPlotGridSize; ++col) {
        int cls = -1;
        if (col < kPlotGridSize) {
          x[0] = lo + (col + 0.5) * cell;
          cls = model->Predict(x);
          ++(cls == 0 ? local.cells_class0 : local.cells_class1);
        }
        if (cls != run_class) {
          if (run_class >= 0) {
            svg << "<rect x=\"" << Num(px(lo) + run_start * cell_px) << "\" y=\""
                << Num(py(lo) - (row + 1) * cell_px) << "\" width=\"" << Num((col - run_start) * cell_px)
                << "\" height=\"" << Num(cell_px) << "\" fill=\"" << kRegionColor[run_class] << "\"/>\n";
          }
          run_start = col;
          run_class = cls;
        }
      }
    }
    svg << "</g>\n";
  }

  svg << "<rect x=\"" << Num(kMargin) << "\" y=\"" << Num(kMargin) << "\" width=\""
      << Num(kCanvas - 2 * kMargin) << "\" height=\"" << Num(kCanvas - 2 * kMargin)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg << "<text x=\"" << Num(kMargin) << "\" y=\"" << Num(kCanvas - 12) << "\" font-size=\"12\">["
      << Num(lo) << ", " << Num(hi) << "]^2</text>\n";

  svg << "<g id=\"points\">\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto row = data.Row(i);
    const int label = data.Label(i);
    svg << "<circle cx=\"" << Num(px(row[0])) << "\" cy=\"" << Num(py(row[1])) << "\" r=\"2.5\" fill=\""
        << kPointColor[label] << "\"/>\n";
  }
  svg << "</g>\n";

  if (model) {
    svg << "<g id=\"misclassified\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.2\">\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto row = data.Row(i);
      if (model->Predict(row) == data.Label(i)) continue;
      ++local.misclassified;
      svg << "<circle cx=\"" << Num(px(row[0])) << "\" cy=\"" << Num(py(row[1])) << "\" r=\"6\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";

  local.points = data.size();
  if (stats) *stats = local;
  return svg.str();
}

}  // namespace sqnn::cli
