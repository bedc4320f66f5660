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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "sqnn/cli/commands.h"
#include "sqnn/cli/experiment.h"
#include "sqnn/cli/records.h"
#include "sqnn/cli/suites.h"
#include "sqnn/cli/svg_plot.h"
#include "sqnn/data.h"
#include "sqnn/errors.h"
#include "test_util.h"

namespace sqnn::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using sqnn::testing::TempDir;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sqnn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

void WriteText(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"train"}).code, kExitUsage);
  EXPECT_EQ(Cli({"eval", "--model", "x.json"}).code, kExitUsage);
  EXPECT_EQ(Cli({"benchmark", "--suite", "exp9"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"--version"}).out, std::string(kToolVersion) + "\n");
}

TEST(CliTest, GenerateCircle) {
  TempDir dir("gen");
  const auto r = Cli({"generate", "circle", "--train", "200", "--test", "2000", "--seed", "1", "--out", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const LabeledDataset train = LoadDataset(dir / "circle_train.ds");
  const LabeledDataset test = LoadDataset(dir / "circle_test.ds");
  EXPECT_EQ(train.size(), 200u);
  EXPECT_EQ(train.CountLabel(1), 100u);
  EXPECT_EQ(test.size(), 2000u);
  EXPECT_EQ(test.CountLabel(1), 1000u);
  const json manifest = ReadJsonFile(dir / "manifest.json");
  EXPECT_EQ(manifest["seed"], 1);
  EXPECT_EQ(manifest["files"].size(), 2u);
}

TEST(CliTest, GenerateFraudMissingCsvWritesNothing) {
  TempDir dir("nocsv");
  const fs::path out = dir / "out";
  const auto r = Cli({"generate", "fraud", "--csv", (dir / "absent.csv").string(), "--out", out.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(fs::exists(out));
}

TEST(CliTest, GenerateFraudFromCsv) {
  TempDir dir("fraud");
  sqnn::testing::WriteSyntheticFraudCsv(dir / "cc.csv", 3000, 450, 1);
  const auto r = Cli({"generate", "fraud", "--csv", (dir / "cc.csv").string(), "--train", "400", "--test", "400",
                      "--seed", "1", "--out", (dir / "o").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* f : {"fraud_train.ds", "fraud_test.ds", "pca_model.txt", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir / "o" / f)) << f;
  }
  const LabeledDataset train = LoadDataset(dir / "o" / "fraud_train.ds");
  EXPECT_EQ(train.size(), 400u);
  EXPECT_EQ(train.CountLabel(1), 200u);
  EXPECT_EQ(train.dim(), 2u);
  // 450 positives cannot fill 500 + 500.
  const auto short_run = Cli({"generate", "fraud", "--csv", (dir / "cc.csv").string(), "--train", "500", "--test",
                              "500", "--out", (dir / "o2").string()});
  EXPECT_EQ(short_run.code, kExitUsage);
  EXPECT_FALSE(fs::exists(dir / "o2"));
}

std::string CircleConfig(const fs::path& out, const std::string& model_lines) {
  return "[run]\nseed = 4\nout = " + out.string() +
         "\n\n[data]\nsource = circle\ntrain_size = 60\ntest_size = 200\n\n[model]\n" + model_lines +
         "\n[train]\niterations = 15\n";
}

TEST(CliTest, TrainWritesSelfContainedRecord) {
  TempDir dir("train");
  WriteText(dir / "cfg.ini", CircleConfig(dir / "run", "family = quantum\nlayer = unitary\nlayers = 3\nprep = none\n"));
  const auto r = Cli({"train", "--config", (dir / "cfg.ini").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rec = ReadJsonFile(dir / "run" / "results.json");
  EXPECT_EQ(rec["model"]["param_count"], 9);
  EXPECT_EQ(rec["model"]["depth"], 6);
  EXPECT_EQ(rec["seed"], 4);
  EXPECT_EQ(rec["version"], kToolVersion);
  EXPECT_TRUE(rec["metrics"].contains("train"));
  EXPECT_TRUE(rec["metrics"].contains("test"));
  EXPECT_FALSE(rec["train"]["loss_history"].empty());
  EXPECT_FALSE(rec.dump().find("wall") != std::string::npos);

  // The echoed config reproduces the run.
  WriteText(dir / "echo.ini", rec["config"].get<std::string>());
  ASSERT_EQ(Cli({"train", "--config", (dir / "echo.ini").string(), "--out", (dir / "again").string()}).code, kExitOk);
  const json again = ReadJsonFile(dir / "again" / "results.json");
  EXPECT_EQ(again["model"], rec["model"]);
  EXPECT_EQ(again["metrics"], rec["metrics"]);

  // Eval on the stored test set reproduces the stored metrics.
  const auto ev = Cli({"eval", "--model", (dir / "run" / "results.json").string(), "--data",
                       (dir / "run" / "test.ds").string(), "--out", (dir / "ev").string()});
  ASSERT_EQ(ev.code, kExitOk) << ev.err;
  EXPECT_EQ(ReadJsonFile(dir / "ev" / "eval.json")["metrics"], rec["metrics"]["test"]);
  EXPECT_EQ(json::parse(ev.out), rec["metrics"]["test"]);
}

TEST(CliTest, TrainIsBitReproducible) {
  TempDir dir("repro");
  WriteText(dir / "cfg.ini", CircleConfig(dir / "run", "family = quantum\nlayer = uat\nlayers = 2\nprep = u\n"));
  ASSERT_EQ(Cli({"train", "--config", (dir / "cfg.ini").string()}).code, kExitOk);
  const std::string first = Slurp(dir / "run" / "results.json");
  ASSERT_EQ(Cli({"train", "--config", (dir / "cfg.ini").string()}).code, kExitOk);
  EXPECT_EQ(Slurp(dir / "run" / "results.json"), first);
  ASSERT_EQ(Cli({"train", "--config", (dir / "cfg.ini").string(), "--seed", "5"}).code, kExitOk);
  EXPECT_NE(Slurp(dir / "run" / "results.json"), first);
}

TEST(CliTest, TrainFraudModels) {
  TempDir dir("trainfraud");
  sqnn::testing::WriteSyntheticFraudCsv(dir / "cc.csv", 3000, 450, 2);
  const std::string data = "[data]\nsource = fraud-csv\ncsv = " + (dir / "cc.csv").string() +
                           "\ntrain_size = 400\ntest_size = 400\n";
  WriteText(dir / "q.ini", "[run]\nseed = 3\nout = " + (dir / "q").string() + "\n" + data +
                               "[model]\nfamily = quantum\nlayer = uat\nlayers = 2\nprep = u\n");
  WriteText(dir / "c.ini", "[run]\nseed = 3\nout = " + (dir / "c").string() + "\n" + data +
                               "[model]\nfamily = classical\nhidden = 3\n[train]\nepochs = 150\n");
  ASSERT_EQ(Cli({"train", "--config", (dir / "q.ini").string()}).code, kExitOk);
  ASSERT_EQ(Cli({"train", "--config", (dir / "c.ini").string()}).code, kExitOk);
  EXPECT_EQ(ReadJsonFile(dir / "q" / "results.json")["model"]["param_count"], 13);
  EXPECT_EQ(ReadJsonFile(dir / "c" / "results.json")["model"]["param_count"], 13);
  EXPECT_TRUE(fs::exists(dir / "q" / "pca_model.txt"));
}

TEST(CliTest, EvalDimensionMismatchFails) {
  TempDir dir("mismatch");
  WriteText(dir / "cfg.ini", CircleConfig(dir / "run", "family = classical\nhidden = 3\n"));
  ASSERT_EQ(Cli({"train", "--config", (dir / "cfg.ini").string()}).code, kExitOk);
  LabeledDataset three(3);
  const double x[3] = {0.1, 0.2, 0.3};
  three.Add(x, 0, 0);
  SaveDataset(three, dir / "three.ds");
  const auto r = Cli({"eval", "--model", (dir / "run" / "model.json").string(), "--data", (dir / "three.ds").string()});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.err.find("features"), std::string::npos);
}

TEST(CliTest, ConfigValidation) {
  TempDir dir("cfg");
  WriteText(dir / "a.ini", "[model]\nfamily = quantum\nlayr = uat\n");
  EXPECT_EQ(Cli({"train", "--config", (dir / "a.ini").string()}).code, kExitUsage);
  WriteText(dir / "b.ini", "[model]\nfamily = quantum\nlayers = 0\n");
  EXPECT_EQ(Cli({"train", "--config", (dir / "b.ini").string()}).code, kExitUsage);
  WriteText(dir / "c.ini", "[data]\nsource = fraud-csv\ncsv = " + (dir / "nope.csv").string() + "\n");
  EXPECT_EQ(Cli({"train", "--config", (dir / "c.ini").string(), "--out", (dir / "o").string()}).code, kExitUsage);
  EXPECT_FALSE(fs::exists(dir / "o"));
  EXPECT_EQ(Cli({"train", "--config", (dir / "missing.ini").string()}).code, kExitUsage);

  ExperimentConfig cfg;
  cfg.seed = 12;
  cfg.model = ClassicalModelSpec{{2, 5}, 40, 0.01};
  WriteText(dir / "r.ini", RenderExperimentConfig(cfg));
  const ExperimentConfig back = LoadExperimentConfig(dir / "r.ini");
  EXPECT_EQ(back.seed, 12u);
  EXPECT_EQ(std::get<ClassicalModelSpec>(back.model).mlp.hidden_units, 5);
  EXPECT_EQ(std::get<ClassicalModelSpec>(back.model).learning_rate, 0.01);
  EXPECT_EQ(RenderExperimentConfig(back), RenderExperimentConfig(cfg));
}

TEST(RecordsTest, ModelJsonRoundTripIsExact) {
  TrainedModel q{TrainedModel::Quantum{{LayerKind::kUat, 2, PrepKind::kTrainableU}, InitialParams({LayerKind::kUat, 2, PrepKind::kTrainableU}, 3), {0.4}}};
  const TrainedModel q2 = ModelFromJson(json::parse(ModelToJson(q).dump()));
  EXPECT_EQ(std::get<TrainedModel::Quantum>(q2.model).params, std::get<TrainedModel::Quantum>(q.model).params);
  EXPECT_EQ(std::get<TrainedModel::Quantum>(q2.model).classifier.threshold, 0.4);
  TrainedModel c{TrainedModel::Classical{{2, 5}, MlpInitialParams({2, 5}, 8)}};
  const TrainedModel c2 = ModelFromJson(json::parse(ModelToJson(c).dump()));
  EXPECT_EQ(std::get<TrainedModel::Classical>(c2.model).params, std::get<TrainedModel::Classical>(c.model).params);
  json bad = ModelToJson(q);
  bad["params"].erase(0);
  EXPECT_THROW(ModelFromJson(bad), FormatError);
  EXPECT_THROW(ModelFromJson(json{{"family", "tensor"}}), FormatError);
}

TEST(RecordsTest, UndefinedMetricsAreNull) {
  SplitMetrics m;
  m.confusion = {0, 4, 0, 0};
  m.accuracy = 1.0;
  const json j = MetricsToJson(m);
  EXPECT_TRUE(j["precision"].is_null());
  EXPECT_TRUE(j["recall"].is_null());
  EXPECT_EQ(j["tn"], 4);
}

TEST(PlotTest, DataOnlyHasNoShadingOrRings) {
  const LabeledDataset d = GenCircle(50, 1);
  PlotStats stats;
  const std::string svg = RenderDecisionSvg(d, nullptr, &stats);
  EXPECT_EQ(stats.points, 50u);
  EXPECT_EQ(stats.misclassified, 0u);
  EXPECT_EQ(svg.find("id=\"regions\""), std::string::npos);
  EXPECT_EQ(svg.find("id=\"misclassified\""), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>"), svg.size() - 7);
}

TEST(PlotTest, PerfectModelHasNoRingsAndGridPartitions) {
  const AnsatzSpec spec{LayerKind::kUat, 2, PrepKind::kTrainableU};
  const TrainedModel model{TrainedModel::Quantum{spec, InitialParams(spec, 6), {}}};
  // Label points by the model itself.
  const LabeledDataset raw = GenCircle(100, 2);
  LabeledDataset d(2);
  for (std::size_t i = 0; i < raw.size(); ++i) d.Add(raw.Row(i), model.Predict(raw.Row(i)), i);
  PlotStats stats;
  const std::string svg = RenderDecisionSvg(d, &model, &stats);
  EXPECT_EQ(stats.misclassified, 0u);
  EXPECT_EQ(stats.cells_class0 + stats.cells_class1, static_cast<std::size_t>(kPlotGridSize * kPlotGridSize));
  EXPECT_NE(svg.find("id=\"regions\""), std::string::npos);

  // Flipping every label rings every point.
  LabeledDataset flipped(2);
  for (std::size_t i = 0; i < d.size(); ++i) flipped.Add(d.Row(i), 1 - d.Label(i), i);
  RenderDecisionSvg(flipped, &model, &stats);
  EXPECT_EQ(stats.misclassified, d.size());
}

TEST(PlotTest, CliRejectsNon2D) {
  TempDir dir("plot");
  LabeledDataset three(3);
  const double x[3] = {0.1, 0.2, 0.3};
  three.Add(x, 0, 0);
  SaveDataset(three, dir / "three.ds");
  EXPECT_EQ(Cli({"plot", "--data", (dir / "three.ds").string(), "--out", (dir / "p.svg").string()}).code, kExitUsage);
  SaveDataset(GenCircle(30, 1), dir / "c.ds");
  EXPECT_EQ(Cli({"plot", "--data", (dir / "c.ds").string(), "--out", (dir / "p.svg").string()}).code, kExitOk);
  EXPECT_NE(Slurp(dir / "p.svg").find("<svg"), std::string::npos);
}

TEST(SuiteTest, RowStructure) {
  EXPECT_EQ(SuiteRows(Suite::kExp1).size(), 3u);
  EXPECT_EQ(SuiteRows(Suite::kExp2).size(), 3u);
  EXPECT_EQ(SuiteRows(Suite::kExp3).size(), 5u);
  EXPECT_EQ(SuiteRows(Suite::kFraud).size(), 8u);
  for (Suite s : {Suite::kExp1, Suite::kExp2, Suite::kExp3, Suite::kFraud}) {
    EXPECT_NO_THROW(CheckSuiteStructure(SuiteRows(s)));
    EXPECT_EQ(ParseSuite(ToString(s)), s);
  }
  auto rows = SuiteRows(Suite::kExp1);
  rows[0].expected_params = 10;
  EXPECT_THROW(CheckSuiteStructure(rows), std::logic_error);
}

TEST(SuiteTest, BenchmarkTablesAndOrdering) {
  TempDir dir("bench");
  const auto r = Cli({"benchmark", "--suite", "exp3", "--seeds", "1,2", "--jobs", "3", "--out", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = Slurp(dir / "exp3_table.csv");
  EXPECT_NE(csv.find("Layer Type,Initial Prep.,#Layers,Depth,#Params"), std::string::npos);
  // One header plus 5 rows x (2 seeds + mean + best).
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 5 * 4);
  const auto serial = Cli({"benchmark", "--suite", "exp3", "--seeds", "1,2", "--jobs", "1", "--out", (dir / "s").string()});
  ASSERT_EQ(serial.code, kExitOk);
  EXPECT_EQ(Slurp(dir / "s" / "exp3_table.csv"), csv);
  EXPECT_EQ(Slurp(dir / "s" / "exp3_table.txt"), Slurp(dir / "exp3_table.txt"));
}

TEST(SuiteTest, FraudSuiteOnSyntheticCsv) {
  TempDir dir("fsuite");
  sqnn::testing::WriteSyntheticFraudCsv(dir / "cc.csv", 3000, 450, 3);
  const auto r = Cli({"benchmark", "--suite", "fraud", "--seeds", "1", "--csv", (dir / "cc.csv").string(), "--out",
                      dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string csv = Slurp(dir / "fraud_table.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 8 * 3);
  EXPECT_NE(csv.find("Classical 1"), std::string::npos);
  EXPECT_EQ(Cli({"benchmark", "--suite", "fraud", "--csv", (dir / "no.csv").string(), "--out", (dir / "x").string()}).code,
            kExitUsage);
}

}  // namespace
}  // namespace sqnn::cli
