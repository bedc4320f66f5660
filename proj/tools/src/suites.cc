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

#include "sqnn/cli/suites.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sqnn::cli {
namespace {

SuiteRow Quantum(std::string layer_type, LayerKind kind, int layers, PrepKind prep,
                 int expected_depth, std::size_t expected_params) {
  QuantumModelSpec q;
  q.ansatz = {kind, layers, prep, 2};
  std::string prep_name = prep == PrepKind::kNone ? "None" : prep == PrepKind::kHadamard ? "H" : "U";
  return {std::move(layer_type), std::move(prep_name), layers, expected_depth, expected_params, q};
}

SuiteRow Classical(std::string name, int hidden, std::size_t expected_params) {
  ClassicalModelSpec c;
  c.mlp.hidden_units = hidden;
  return {std::move(name), "None", 2, std::nullopt, expected_params, c};
}

std::string Cell(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", *v);
  return buf;
}

std::string CsvCell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

std::optional<double> Mean(const RowResult& r, std::optional<double> SplitMetrics::*field, bool train) {
  double sum = 0.0;
  int n = 0;
  for (const SeedRun& run : r.runs) {
    if (!run.ok()) continue;
    const auto& v = (train ? run.train : run.test).*field;
    if (v) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

struct Line {
  std::vector<std::string> cells;
};

std::vector<std::string> Header() {
  return {"Layer Type", "Initial Prep.", "#Layers", "Depth", "#Params", "Seed", "Train Acc.",
          "Acc.", "Precision", "Recall", "tp", "tn", "fp", "fn", "Status"};
}

std::vector<Line> Lines(const BenchmarkTable& table, bool csv) {
  auto num = [csv](const std::optional<double>& v) { return csv ? CsvCell(v) : Cell(v); };
  std::vector<Line> lines;
  for (const RowResult& r : table.rows) {
    const std::vector<std::string> lead = {
        r.row.layer_type, r.row.prep, std::to_string(r.row.n_layers),
        r.depth ? std::to_string(*r.depth) : "-", std::to_string(r.params)};
    auto with_lead = [&lead](std::vector<std::string> rest) {
      std::vector<std::string> cells = lead;
      cells.insert(cells.end(), rest.begin(), rest.end());
      return Line{cells};
    };
    for (const SeedRun& run : r.runs) {
      if (!run.ok()) {
        lines.push_back(with_lead({std::to_string(run.seed), "", "", "", "", "", "", "", "", "",
                                   "error: " + run.error}));
        continue;
      }
      const auto& cm = run.test.confusion;
      lines.push_back(with_lead({std::to_string(run.seed), num(run.train.accuracy),
                                 num(run.test.accuracy), num(run.test.precision),
                                 num(run.test.recall), std::to_string(cm.tp), std::to_string(cm.tn),
                                 std::to_string(cm.fp), std::to_string(cm.fn), "ok"}));
    }
    lines.push_back(with_lead({"mean", num(Mean(r, &SplitMetrics::accuracy, true)),
                               num(Mean(r, &SplitMetrics::accuracy, false)),
                               num(Mean(r, &SplitMetrics::precision, false)),
                               num(Mean(r, &SplitMetrics::recall, false)), "", "", "", "", ""}));
    if (const SeedRun* best = r.Best()) {
      const auto& cm = best->test.confusion;
      lines.push_back(with_lead({"best(" + std::to_string(best->seed) + ")",
                                 num(best->train.accuracy), num(best->test.accuracy),
                                 num(best->test.precision), num(best->test.recall),
                                 std::to_string(cm.tp), std::to_string(cm.tn),
                                 std::to_string(cm.fp), std::to_string(cm.fn), ""}));
    }
  }
  return lines;
}

}  // namespace

std::string_view ToString(Suite suite) {
  switch (suite) {
    case Suite::kExp1:
      return "exp1";
    case Suite::kExp2:
      return "exp2";
    case Suite::kExp3:
      return "exp3";
    case Suite::kFraud:
      return "fraud";
  }
  return "?";
}

Suite ParseSuite(std::string_view name) {
  for (Suite s : {Suite::kExp1, Suite::kExp2, Suite::kExp3, Suite::kFraud}) {
    if (name == ToString(s)) return s;
  }
  throw UsageError("unknown suite '" + std::string(name) + "' (expected exp1, exp2, exp3 or fraud)");
}

std::vector<SuiteRow> SuiteRows(Suite suite) {
  using LK = LayerKind;
  using PK = PrepKind;
  switch (suite) {
    case Suite::kExp1:
      return {Quantum("Unitary", LK::kUnitary, 3, PK::kNone, 6, 9),
              Quantum("Compressed Unitary", LK::kCompressedUnitary, 3, PK::kNone, 3, 18),
              Quantum("UAT", LK::kUat, 3, PK::kNone, 6, 15)};
    case Suite::kExp2:
      return {Quantum("UAT", LK::kUat, 3, PK::kNone, 6, 15),
              Quantum("UAT", LK::kUat, 3, PK::kHadamard, 7, 15),
              Quantum("UAT", LK::kUat, 3, PK::kTrainableU, 7, 18)};
    case Suite::kExp3:
      return {Quantum("UAT", LK::kUat, 1, PK::kTrainableU, 3, 8),
              Quantum("UAT", LK::kUat, 2, PK::kTrainableU, 5, 13),
              Quantum("UAT", LK::kUat, 3, PK::kTrainableU, 7, 18),
              Quantum("UAT", LK::kUat, 4, PK::kTrainableU, 9, 23),
              Quantum("UAT", LK::kUat, 5, PK::kTrainableU, 11, 28)};
    case Suite::kFraud:
      return {Quantum("UAT", LK::kUat, 1, PK::kTrainableU, 3, 8),
              Quantum("UAT", LK::kUat, 2, PK::kTrainableU, 5, 13),
              Quantum("UAT", LK::kUat, 4, PK::kTrainableU, 9, 23),
              Quantum("UAT", LK::kUat, 2, PK::kNone, 4, 10),
              Quantum("UAT", LK::kUat, 3, PK::kNone, 6, 15),
              Quantum("Unitary", LK::kUnitary, 3, PK::kNone, 6, 9),
              Classical("Classical 1", 3, 13),
              Classical("Classical 2", 5, 21)};
  }
  return {};
}

void CheckSuiteStructure(const std::vector<SuiteRow>& rows) {
  for (const SuiteRow& row : rows) {
    std::size_t params = 0;
    std::optional<int> depth;
    if (const auto* q = std::get_if<QuantumModelSpec>(&row.model)) {
      params = ParamCount(q->ansatz);
      depth = CircuitDepth(q->ansatz);
    } else {
      params = MlpParamCount(std::get<ClassicalModelSpec>(row.model).mlp);
    }
    if (params != row.expected_params || depth != row.expected_depth) {
      std::ostringstream msg;
      msg << "suite row '" << row.layer_type << "/" << row.prep << "/" << row.n_layers
          << "': computed " << params << " params, depth " << (depth ? *depth : -1)
          << "; table says " << row.expected_params << ", "
          << (row.expected_depth ? *row.expected_depth : -1);
      throw std::logic_error(msg.str());
    }
  }
}

const SeedRun* RowResult::Best() const {
  const SeedRun* best = nullptr;
  for (const SeedRun& run : runs) {
    if (!run.ok() || !run.test.accuracy) continue;
    if (!best || *run.test.accuracy > *best->test.accuracy) best = &run;
  }
  return best;
}

std::optional<double> RowResult::MeanTestAccuracy() const {
  return Mean(*this, &SplitMetrics::accuracy, false);
}

BenchmarkTable RunSuite(const SuiteOptions& options) {
  BenchmarkTable table;
  table.suite = options.suite;
  const std::vector<SuiteRow> rows = SuiteRows(options.suite);
  CheckSuiteStructure(rows);

  std::optional<LabeledDataset> fraud = options.fraud_projected;
  if (options.suite == Suite::kFraud && !fraud) {
    if (options.fraud_csv.empty()) throw UsageError("fraud suite needs --csv");
    fraud = ProjectFraudCsv(options.fraud_csv).full;
  }

  // Datasets depend only on the seed, so every row sees the same instances.
  std::vector<TrainTestSplit> splits;
  std::vector<std::string> split_errors;
  for (std::uint64_t seed : options.seeds) {
    try {
      splits.push_back(fraud ? BalancedSample(*fraud, 400, 400, seed) : CircleSplit(200, 2000, seed));
      split_errors.emplace_back();
    } catch (const std::exception& e) {
      splits.push_back({LabeledDataset(2), LabeledDataset(2)});
      split_errors.emplace_back(e.what());
    }
  }

  for (const SuiteRow& row : rows) {
    RowResult r;
    r.row = row;
    r.depth = row.expected_depth;
    r.params = row.expected_params;
    r.runs.resize(options.seeds.size());
    table.rows.push_back(std::move(r));
  }

  const std::size_t n_tasks = rows.size() * options.seeds.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const std::size_t row_index = task / options.seeds.size();
      const std::size_t seed_index = task % options.seeds.size();
      SeedRun& run = table.rows[row_index].runs[seed_index];
      run.seed = options.seeds[seed_index];
      if (!split_errors[seed_index].empty()) {
        run.error = split_errors[seed_index];
        continue;
      }
      try {
        const TrainTestSplit& split = splits[seed_index];
        const TrainOutcome outcome = TrainModel(rows[row_index].model, split.train, run.seed);
        run.final_loss = outcome.loss_history.back();
        run.train = Evaluate(outcome.model, split.train);
        run.test = Evaluate(outcome.model, split.test);
      } catch (const std::exception& e) {
        run.error = e.what();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int i = 1; i < jobs; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return table;
}

std::string RenderTableText(const BenchmarkTable& table) {
  const auto header = Header();
  const auto lines = Lines(table, false);
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const Line& line : lines) {
    for (std::size_t c = 0; c < line.cells.size(); ++c) width[c] = std::max(width[c], line.cells[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      row += cell;
      if (c + 1 < cells.size()) row += " | ";
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  };
  out << "# suite " << ToString(table.suite) << '\n';
  emit(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 3;
  out << std::string(total - 3, '-') << '\n';
  for (const Line& line : lines) emit(line.cells);
  return out.str();
}

std::string RenderTableCsv(const BenchmarkTable& table) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << quote(cells[c]);
    out << '\n';
  };
  emit(Header());
  for (const Line& line : Lines(table, true)) emit(line.cells);
  return out.str();
}

}  // namespace sqnn::cli
