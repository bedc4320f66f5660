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

#include "sqnn/cli/commands.h"

#include <filesystem>
#include <functional>
#include <optional>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "sqnn/cli/experiment.h"
#include "sqnn/cli/records.h"
#include "sqnn/cli/suites.h"
#include "sqnn/cli/svg_plot.h"
#include "sqnn/errors.h"

namespace sqnn::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<fs::path> out;
  std::optional<fs::path> config;
};

struct GenerateOptions {
  std::string kind;
  std::optional<std::size_t> train;
  std::optional<std::size_t> test;
  std::optional<fs::path> csv;
};

struct EvalOptions {
  fs::path model;
  fs::path data;
};

struct BenchmarkOptions {
  std::optional<std::string> suite;
  std::vector<std::uint64_t> seeds;
  std::optional<fs::path> csv;
  std::optional<int> jobs;
};

struct PlotOptions {
  std::optional<fs::path> data;
  std::optional<fs::path> model;
};

boost::property_tree::ptree ReadIni(const fs::path& path) {
  if (!fs::exists(path)) throw UsageError("config file '" + path.string() + "' not found");
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path.string(), tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return tree;
}

void RequireFile(const fs::path& path, const char* what) {
  if (path.empty() || !fs::is_regular_file(path)) {
    throw UsageError(std::string(what) + " '" + path.string() + "' not found");
  }
}

json DatasetSummary(const std::string& name, const LabeledDataset& d) {
  return {{"file", name},
          {"rows", d.size()},
          {"positives", d.CountLabel(1)},
          {"source", d.meta().source},
          {"seed", d.meta().seed},
          {"transforms", d.meta().transforms}};
}

// Writes every file or none: a failure part-way removes what was written.
class AtomicOutputs {
 public:
  explicit AtomicOutputs(fs::path dir) : dir_(std::move(dir)) {}

  template <typename Fn>
  void Write(const std::string& name, Fn&& fn) {
    pending_.emplace_back(name, std::forward<Fn>(fn));
  }

  void Commit() {
    fs::create_directories(dir_);
    std::vector<fs::path> written;
    try {
      for (auto& [name, fn] : pending_) {
        const fs::path path = dir_ / name;
        fn(path);
        written.push_back(path);
      }
    } catch (...) {
      for (const auto& p : written) {
        std::error_code ec;
        fs::remove(p, ec);
      }
      throw;
    }
  }

 private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::function<void(const fs::path&)>>> pending_;
};

int CmdGenerate(const GlobalOptions& global, const GenerateOptions& opt, std::ostream& out) {
  DataSource source;
  std::uint64_t seed = 0;
  fs::path out_dir = "data";
  if (global.config) {
    const ExperimentConfig cfg = LoadExperimentConfig(*global.config);
    source = cfg.data;
    seed = cfg.seed;
    out_dir = cfg.out_dir;
  }
  if (!opt.kind.empty()) {
    if (opt.kind == "circle") {
      source.kind = DataSourceKind::kCircle;
      if (!global.config) source.train_size = 200, source.test_size = 2000;
    } else if (opt.kind == "fraud") {
      source.kind = DataSourceKind::kFraudCsv;
      if (!global.config) source.train_size = 400, source.test_size = 400;
    } else {
      throw UsageError("generate: kind must be circle or fraud");
    }
  } else if (!global.config) {
    throw UsageError("generate: give a kind (circle or fraud) or --config");
  }
  if (opt.train) source.train_size = *opt.train;
  if (opt.test) source.test_size = *opt.test;
  if (opt.csv) source.csv = *opt.csv;
  if (global.seed) seed = *global.seed;
  if (global.out) out_dir = *global.out;
  if (source.kind == DataSourceKind::kFiles) throw UsageError("generate: data.source must be circle or fraud-csv");

  AtomicOutputs outputs(out_dir);
  json manifest = {{"tool", "sqnn"}, {"version", kToolVersion}, {"seed", seed}};
  if (source.kind == DataSourceKind::kCircle) {
    TrainTestSplit split = CircleSplit(source.train_size, source.test_size, seed);
    manifest["kind"] = "circle";
    manifest["source"] = "circle";
    manifest["files"] = {DatasetSummary("circle_train.ds", split.train),
                         DatasetSummary("circle_test.ds", split.test)};
    outputs.Write("circle_train.ds", [d = std::move(split.train)](const fs::path& p) { SaveDataset(d, p); });
    outputs.Write("circle_test.ds", [d = std::move(split.test)](const fs::path& p) { SaveDataset(d, p); });
  } else {
    RequireFile(source.csv, "fraud CSV");
    FraudProjection projection = ProjectFraudCsv(source.csv);
    TrainTestSplit split = BalancedSample(projection.full, source.train_size, source.test_size, seed);
    manifest["kind"] = "fraud";
    manifest["source"] = source.csv.string();
    manifest["csv_rows"] = projection.full.size();
    manifest["csv_positives"] = projection.full.CountLabel(1);
    manifest["pca_model"] = "pca_model.txt";
    manifest["pca_explained_variance_ratio"] = projection.pca.ExplainedVarianceRatio();
    manifest["files"] = {DatasetSummary("fraud_train.ds", split.train),
                         DatasetSummary("fraud_test.ds", split.test)};
    outputs.Write("fraud_train.ds", [d = std::move(split.train)](const fs::path& p) { SaveDataset(d, p); });
    outputs.Write("fraud_test.ds", [d = std::move(split.test)](const fs::path& p) { SaveDataset(d, p); });
    outputs.Write("pca_model.txt", [m = std::move(projection.pca)](const fs::path& p) { SavePcaModel(m, p); });
  }
  outputs.Write("manifest.json", [&manifest](const fs::path& p) { WriteJsonFile(manifest, p); });
  outputs.Commit();
  for (const auto& f : manifest["files"]) {
    out << (out_dir / f["file"].get<std::string>()).string() << ": " << f["rows"] << " rows, "
        << f["positives"] << " positives\n";
  }
  return kExitOk;
}

int CmdTrain(const GlobalOptions& global, std::ostream& out) {
  if (!global.config) throw UsageError("train: --config is required");
  ExperimentConfig cfg = LoadExperimentConfig(*global.config);
  if (global.seed) cfg.seed = *global.seed;
  if (global.out) cfg.out_dir = *global.out;

  LabeledDataset train(2);
  std::optional<LabeledDataset> test;
  AtomicOutputs outputs(cfg.out_dir);
  json artifacts = json::object();
  switch (cfg.data.kind) {
    case DataSourceKind::kCircle: {
      TrainTestSplit split = CircleSplit(cfg.data.train_size, cfg.data.test_size, cfg.seed);
      train = std::move(split.train);
      test = std::move(split.test);
      break;
    }
    case DataSourceKind::kFraudCsv: {
      RequireFile(cfg.data.csv, "fraud CSV");
      FraudProjection projection = ProjectFraudCsv(cfg.data.csv);
      TrainTestSplit split = BalancedSample(projection.full, cfg.data.train_size, cfg.data.test_size, cfg.seed);
      train = std::move(split.train);
      test = std::move(split.test);
      outputs.Write("pca_model.txt", [m = projection.pca](const fs::path& p) { SavePcaModel(m, p); });
      artifacts["pca_model"] = (cfg.out_dir / "pca_model.txt").string();
      break;
    }
    case DataSourceKind::kFiles:
      RequireFile(cfg.data.train_file, "training dataset");
      train = LoadDataset(cfg.data.train_file);
      if (!cfg.data.test_file.empty()) {
        RequireFile(cfg.data.test_file, "test dataset");
        test = LoadDataset(cfg.data.test_file);
      }
      break;
  }

  const std::size_t expected_dim = std::holds_alternative<QuantumModelSpec>(cfg.model)
                                       ? static_cast<std::size_t>(std::get<QuantumModelSpec>(cfg.model).ansatz.input_dim)
                                       : static_cast<std::size_t>(std::get<ClassicalModelSpec>(cfg.model).mlp.input_dim);
  if (train.dim() != expected_dim || (test && test->dim() != expected_dim)) {
    throw UsageError("train: dataset dimension does not match the model input_dim");
  }

  const TrainOutcome outcome = TrainModel(cfg.model, train, cfg.seed);
  const SplitMetrics train_metrics = Evaluate(outcome.model, train);

  json record = {
      {"tool", "sqnn"},
      {"version", kToolVersion},
      {"command", "train"},
      {"seed", cfg.seed},
      {"config", RenderExperimentConfig(cfg)},
      {"model", ModelToJson(outcome.model)},
      {"train", {{"iterations", outcome.iterations},
                 {"loss_history", outcome.loss_history},
                 {"final_loss", outcome.loss_history.back()}}},
  };
  record["metrics"]["train"] = MetricsToJson(train_metrics);
  if (test) record["metrics"]["test"] = MetricsToJson(Evaluate(outcome.model, *test));

  if (cfg.data.kind != DataSourceKind::kFiles) {
    outputs.Write("train.ds", [d = train](const fs::path& p) { SaveDataset(d, p); });
    artifacts["train_data"] = (cfg.out_dir / "train.ds").string();
    if (test) {
      outputs.Write("test.ds", [d = *test](const fs::path& p) { SaveDataset(d, p); });
      artifacts["test_data"] = (cfg.out_dir / "test.ds").string();
    }
  } else {
    artifacts["train_data"] = cfg.data.train_file.string();
    if (test) artifacts["test_data"] = cfg.data.test_file.string();
  }
  artifacts["model"] = (cfg.out_dir / "model.json").string();
  artifacts["results"] = (cfg.out_dir / "results.json").string();
  record["artifacts"] = artifacts;

  const json model_json = record["model"];
  const std::string config_text = RenderExperimentConfig(cfg);
  outputs.Write("model.json", [&model_json](const fs::path& p) { WriteJsonFile(model_json, p); });
  outputs.Write("results.json", [&record](const fs::path& p) { WriteJsonFile(record, p); });
  outputs.Write("config.ini", [&config_text](const fs::path& p) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!(f << config_text)) throw IoError("cannot write '" + p.string() + "'");
  });
  outputs.Commit();

  out << "params " << outcome.model.ParamCount() << ", iterations " << outcome.iterations
      << ", final loss " << outcome.loss_history.back() << ", wall " << outcome.wall_seconds << " s\n";
  out << "train accuracy " << train_metrics.accuracy.value_or(0.0);
  if (test) out << ", test accuracy " << record["metrics"]["test"]["accuracy"];
  out << "\nwrote " << (cfg.out_dir / "results.json").string() << '\n';
  return kExitOk;
}

int CmdEval(const GlobalOptions& global, const EvalOptions& opt, std::ostream& out) {
  RequireFile(opt.model, "model file");
  RequireFile(opt.data, "dataset file");
  const TrainedModel model = ModelFromJson(ReadJsonFile(opt.model));
  const LabeledDataset data = LoadDataset(opt.data);
  if (data.dim() != model.InputDim()) {
    throw UsageError("eval: dataset has " + std::to_string(data.dim()) + " features, model expects " +
                     std::to_string(model.InputDim()));
  }
  const SplitMetrics m = Evaluate(model, data);
  const json metrics = MetricsToJson(m);
  out << metrics.dump() << '\n';
  {
    fs::path out_dir = global.out ? *global.out : opt.model.parent_path();
    if (out_dir.empty()) out_dir = ".";
    const json record = {{"tool", "sqnn"},
                         {"version", kToolVersion},
                         {"command", "eval"},
                         {"model_file", opt.model.string()},
                         {"data_file", opt.data.string()},
                         {"model", ModelToJson(model)},
                         {"metrics", metrics}};
    AtomicOutputs outputs(out_dir);
    outputs.Write("eval.json", [&record](const fs::path& p) { WriteJsonFile(record, p); });
    outputs.Commit();
  }
  return kExitOk;
}

int CmdBenchmark(const GlobalOptions& global, const BenchmarkOptions& opt, std::ostream& out) {
  SuiteOptions suite_opt;
  fs::path out_dir = "bench";
  std::string suite_name;
  if (global.config) {
    const auto tree = ReadIni(*global.config);
    suite_name = tree.get<std::string>("benchmark.suite", "");
    if (auto seeds = tree.get_optional<std::string>("benchmark.seeds")) {
      suite_opt.seeds.clear();
      std::istringstream in(*seeds);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        try {
          suite_opt.seeds.push_back(std::stoull(tok));
        } catch (const std::exception&) {
          throw UsageError("config: bad seed '" + tok + "'");
        }
      }
    }
    suite_opt.jobs = tree.get<int>("benchmark.jobs", 1);
    suite_opt.fraud_csv = tree.get<std::string>("data.csv", "");
    out_dir = tree.get<std::string>("run.out", out_dir.string());
  }
  if (opt.suite) suite_name = *opt.suite;
  if (suite_name.empty()) throw UsageError("benchmark: --suite is required");
  suite_opt.suite = ParseSuite(suite_name);
  if (!opt.seeds.empty()) suite_opt.seeds = opt.seeds;
  if (suite_opt.seeds.empty()) throw UsageError("benchmark: no seeds given");
  if (opt.jobs) suite_opt.jobs = *opt.jobs;
  if (opt.csv) suite_opt.fraud_csv = *opt.csv;
  if (global.out) out_dir = *global.out;
  if (suite_opt.suite == Suite::kFraud) RequireFile(suite_opt.fraud_csv, "fraud CSV");

  const BenchmarkTable table = RunSuite(suite_opt);
  const std::string text = RenderTableText(table);
  const std::string csv = RenderTableCsv(table);
  const std::string stem = std::string(ToString(table.suite)) + "_table";
  AtomicOutputs outputs(out_dir);
  auto write_text = [](const std::string& content) {
    return [content](const fs::path& p) {
      std::ofstream f(p, std::ios::binary | std::ios::trunc);
      if (!(f << content)) throw IoError("cannot write '" + p.string() + "'");
    };
  };
  outputs.Write(stem + ".txt", write_text(text));
  outputs.Write(stem + ".csv", write_text(csv));
  outputs.Commit();
  out << text;
  return kExitOk;
}

int CmdPlot(const GlobalOptions& global, const PlotOptions& opt, std::ostream& out) {
  std::optional<fs::path> data_path = opt.data;
  std::optional<fs::path> model_path = opt.model;
  std::optional<fs::path> out_path = global.out;
  if (global.config) {
    const auto tree = ReadIni(*global.config);
    if (!data_path) {
      if (auto v = tree.get_optional<std::string>("plot.data")) data_path = *v;
    }
    if (!model_path) {
      if (auto v = tree.get_optional<std::string>("plot.model")) model_path = *v;
    }
    if (!out_path) {
      if (auto v = tree.get_optional<std::string>("plot.out")) out_path = *v;
    }
  }
  if (!data_path) throw UsageError("plot: --data is required");
  if (!out_path) throw UsageError("plot: --out is required");
  RequireFile(*data_path, "dataset file");
  const LabeledDataset data = LoadDataset(*data_path);
  std::optional<TrainedModel> model;
  if (model_path) {
    RequireFile(*model_path, "model file");
    model = ModelFromJson(ReadJsonFile(*model_path));
  }
  PlotStats stats;
  const std::string svg = RenderDecisionSvg(data, model ? &*model : nullptr, &stats);
  if (out_path->has_parent_path()) fs::create_directories(out_path->parent_path());
  std::ofstream f(*out_path, std::ios::binary | std::ios::trunc);
  if (!(f << svg)) throw IoError("cannot write '" + out_path->string() + "'");
  out << "wrote " << out_path->string() << " (" << stats.points << " points, " << stats.misclassified
      << " misclassified)\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-qubit data re-uploading classifiers: simulate, train, benchmark"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed (overrides [run] seed)");
  app.add_option("--out", global.out, "Output directory (file for plot)");
  app.add_option("--config", global.config, "INI config file");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write train/test dataset files");
  generate->add_option("kind", gen.kind, "circle or fraud");
  generate->add_option("--train", gen.train, "Training rows");
  generate->add_option("--test", gen.test, "Test rows");
  generate->add_option("--csv", gen.csv, "Kaggle creditcard.csv (fraud)");

  auto* train = app.add_subcommand("train", "Train one model from a config file");

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Recompute metrics of a trained model on a dataset");
  eval->add_option("--model", ev.model, "model.json or results.json")->required();
  eval->add_option("--data", ev.data, "Dataset file")->required();

  BenchmarkOptions bench;
  auto* benchmark = app.add_subcommand("benchmark", "Regenerate a comparison table");
  benchmark->add_option("--suite", bench.suite, "exp1, exp2, exp3 or fraud");
  benchmark->add_option("--seeds", bench.seeds, "Comma-separated seeds")->delimiter(',');
  benchmark->add_option("--csv", bench.csv, "Kaggle creditcard.csv (fraud suite)");
  benchmark->add_option("--jobs", bench.jobs, "Worker threads");

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Decision-region SVG for a 2-D dataset");
  plot_cmd->add_option("--data", plot.data, "Dataset file");
  plot_cmd->add_option("--model", plot.model, "model.json or results.json");

  // Global flags are accepted after the verb as well.
  for (auto* sub : {generate, train, eval, benchmark, plot_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sqnn: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return CmdGenerate(global, gen, out);
    if (*train) return CmdTrain(global, out);
    if (*eval) return CmdEval(global, ev, out);
    if (*benchmark) return CmdBenchmark(global, bench, out);
    if (*plot_cmd) return CmdPlot(global, plot, out);
  } catch (const UsageError& e) {
    err << "sqnn: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "sqnn: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sqnn: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sqnn::cli
