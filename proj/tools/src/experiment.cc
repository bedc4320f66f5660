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

#include "sqnn/cli/experiment.h"

#include <chrono>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sqnn/data.h"
#include "sqnn/random.h"

namespace sqnn::cli {
namespace {

namespace pt = boost::property_tree;

constexpr std::uint64_t kCircleTrainStream = 0x747261696e;  // "train"
constexpr std::uint64_t kCircleTestStream = 0x74657374;     // "test"

const std::set<std::string>& AllowedKeys(const std::string& section) {
  static const std::map<std::string, std::set<std::string>> kAllowed = {
      {"run", {"seed", "out"}},
      {"data", {"source", "train_size", "test_size", "csv", "train", "test"}},
      {"model", {"family", "layer", "layers", "prep", "input_dim", "hidden"}},
      {"train", {"optimizer", "iterations", "learning_rate", "gradient", "fd_step", "epochs"}},
      {"classifier", {"threshold"}},
      // Read by the benchmark and plot verbs.
      {"benchmark", {"suite", "seeds", "jobs"}},
      {"plot", {"data", "model", "out"}},
  };
  static const std::set<std::string> kNone;
  auto it = kAllowed.find(section);
  return it == kAllowed.end() ? kNone : it->second;
}

template <typename T>
T Get(const pt::ptree& tree, const std::string& key, T fallback) {
  auto v = tree.get_optional<std::string>(key);
  if (!v) return fallback;
  std::istringstream in(*v);
  T out{};
  in >> out;
  if (in.fail() || !in.eof()) throw UsageError("config: bad value '" + *v + "' for " + key);
  return out;
}

std::string GetString(const pt::ptree& tree, const std::string& key, const std::string& fallback) {
  return tree.get<std::string>(key, fallback);
}

std::string FormatDouble(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw UsageError("config file '" + path.string() + "' not found");
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    const auto& allowed = AllowedKeys(section);
    if (allowed.empty()) throw UsageError("config: unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!allowed.count(key)) throw UsageError("config: unknown key '" + key + "' in [" + section + "]");
    }
  }

  ExperimentConfig cfg;
  try {
    cfg.seed = Get<std::uint64_t>(tree, "run.seed", 0);
    cfg.out_dir = GetString(tree, "run.out", "out");

    const std::string source = GetString(tree, "data.source", "circle");
    if (source == "circle") {
      cfg.data.kind = DataSourceKind::kCircle;
      cfg.data.train_size = Get<std::size_t>(tree, "data.train_size", 200);
      cfg.data.test_size = Get<std::size_t>(tree, "data.test_size", 2000);
    } else if (source == "fraud-csv") {
      cfg.data.kind = DataSourceKind::kFraudCsv;
      cfg.data.train_size = Get<std::size_t>(tree, "data.train_size", 400);
      cfg.data.test_size = Get<std::size_t>(tree, "data.test_size", 400);
      cfg.data.csv = GetString(tree, "data.csv", "");
      if (cfg.data.csv.empty()) throw UsageError("config: data.source = fraud-csv needs data.csv");
    } else if (source == "files") {
      cfg.data.kind = DataSourceKind::kFiles;
      cfg.data.train_file = GetString(tree, "data.train", "");
      cfg.data.test_file = GetString(tree, "data.test", "");
      if (cfg.data.train_file.empty()) throw UsageError("config: data.source = files needs data.train");
    } else {
      throw UsageError("config: data.source must be circle, fraud-csv or files");
    }

    const std::string family = GetString(tree, "model.family", "quantum");
    if (family == "quantum") {
      QuantumModelSpec q;
      q.ansatz.layer_kind = ParseLayerKind(GetString(tree, "model.layer", "unitary"));
      q.ansatz.n_layers = Get<int>(tree, "model.layers", 1);
      q.ansatz.prep = ParsePrepKind(GetString(tree, "model.prep", "none"));
      q.ansatz.input_dim = Get<int>(tree, "model.input_dim", 2);
      q.ansatz.Validate();
      q.train.optimizer = ParseOptimizerKind(GetString(tree, "train.optimizer", "lbfgs"));
      q.train.max_iterations = Get<int>(tree, "train.iterations", 50);
      q.train.learning_rate = Get<double>(tree, "train.learning_rate", 0.05);
      q.train.gradient = ParseGradientMode(GetString(tree, "train.gradient", "analytic"));
      q.train.fd_step = Get<double>(tree, "train.fd_step", 1e-5);
      q.train.Validate();
      q.classifier.threshold = Get<double>(tree, "classifier.threshold", 0.5);
      q.classifier.Validate();
      cfg.model = q;
    } else if (family == "classical") {
      ClassicalModelSpec c;
      c.mlp.input_dim = Get<int>(tree, "model.input_dim", 2);
      c.mlp.hidden_units = Get<int>(tree, "model.hidden", 3);
      c.mlp.Validate();
      c.epochs = Get<int>(tree, "train.epochs", 150);
      c.learning_rate = Get<double>(tree, "train.learning_rate", 0.05);
      if (c.epochs < 0 || !(c.learning_rate > 0.0)) {
        throw UsageError("config: epochs must be >= 0 and learning_rate > 0");
      }
      cfg.model = c;
    } else {
      throw UsageError("config: model.family must be quantum or classical");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

std::string RenderExperimentConfig(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "[run]\nseed = " << cfg.seed << "\nout = " << cfg.out_dir.string() << "\n\n[data]\n";
  switch (cfg.data.kind) {
    case DataSourceKind::kCircle:
      out << "source = circle\ntrain_size = " << cfg.data.train_size
          << "\ntest_size = " << cfg.data.test_size << "\n";
      break;
    case DataSourceKind::kFraudCsv:
      out << "source = fraud-csv\ncsv = " << cfg.data.csv.string() << "\ntrain_size = "
          << cfg.data.train_size << "\ntest_size = " << cfg.data.test_size << "\n";
      break;
    case DataSourceKind::kFiles:
      out << "source = files\ntrain = " << cfg.data.train_file.string() << "\n";
      if (!cfg.data.test_file.empty()) out << "test = " << cfg.data.test_file.string() << "\n";
      break;
  }
  if (const auto* q = std::get_if<QuantumModelSpec>(&cfg.model)) {
    out << "\n[model]\nfamily = quantum\nlayer = " << ToString(q->ansatz.layer_kind)
        << "\nlayers = " << q->ansatz.n_layers << "\nprep = " << ToString(q->ansatz.prep)
        << "\ninput_dim = " << q->ansatz.input_dim << "\n\n[train]\noptimizer = "
        << ToString(q->train.optimizer) << "\niterations = " << q->train.max_iterations
        << "\nlearning_rate = " << FormatDouble(q->train.learning_rate)
        << "\ngradient = " << ToString(q->train.gradient)
        << "\nfd_step = " << FormatDouble(q->train.fd_step)
        << "\n\n[classifier]\nthreshold = " << FormatDouble(q->classifier.threshold) << "\n";
  } else {
    const auto& c = std::get<ClassicalModelSpec>(cfg.model);
    out << "\n[model]\nfamily = classical\ninput_dim = " << c.mlp.input_dim
        << "\nhidden = " << c.mlp.hidden_units << "\n\n[train]\nepochs = " << c.epochs
        << "\nlearning_rate = " << FormatDouble(c.learning_rate) << "\n";
  }
  return out.str();
}

std::size_t TrainedModel::InputDim() const {
  if (const auto* q = std::get_if<Quantum>(&model)) return static_cast<std::size_t>(q->spec.input_dim);
  return static_cast<std::size_t>(std::get<Classical>(model).spec.input_dim);
}

std::size_t TrainedModel::ParamCount() const {
  if (const auto* q = std::get_if<Quantum>(&model)) return sqnn::ParamCount(q->spec);
  return MlpParamCount(std::get<Classical>(model).spec);
}

int TrainedModel::Predict(std::span<const double> features) const {
  if (const auto* q = std::get_if<Quantum>(&model)) {
    return sqnn::Predict(q->spec, q->params, features, q->classifier);
  }
  const auto& c = std::get<Classical>(model);
  return MlpPredict(c.spec, c.params, features);
}

std::vector<int> TrainedModel::PredictAll(const LabeledDataset& data) const {
  if (data.dim() != InputDim()) {
    throw UsageError("dataset has " + std::to_string(data.dim()) + " features, model expects " +
                     std::to_string(InputDim()));
  }
  std::vector<int> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = Predict(data.Row(i));
  return out;
}

SplitMetrics Evaluate(const TrainedModel& model, const LabeledDataset& data) {
  SplitMetrics m;
  m.confusion = Confusion(model.PredictAll(data), data.labels());
  m.accuracy = Accuracy(m.confusion);
  m.precision = Precision(m.confusion);
  m.recall = Recall(m.confusion);
  return m;
}

TrainOutcome TrainModel(const ModelSpec& spec, const LabeledDataset& train, std::uint64_t seed) {
  TrainOutcome out;
  if (const auto* q = std::get_if<QuantumModelSpec>(&spec)) {
    TrainConfig config = q->train;
    config.seed = seed;
    TrainReport report = Train(q->ansatz, train, config);
    out.model.model = TrainedModel::Quantum{q->ansatz, std::move(report.params), q->classifier};
    out.loss_history = std::move(report.loss_history);
    out.iterations = report.iterations;
    out.wall_seconds = report.wall_seconds;
    return out;
  }
  const auto& c = std::get<ClassicalModelSpec>(spec);
  const auto t0 = std::chrono::steady_clock::now();
  MlpTrainResult result = MlpTrain(c.mlp, train, c.epochs, seed, c.learning_rate);
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.model.model = TrainedModel::Classical{c.mlp, std::move(result.params)};
  out.loss_history = std::move(result.loss_history);
  out.iterations = c.epochs;
  return out;
}

TrainTestSplit CircleSplit(std::size_t n_train, std::size_t n_test, std::uint64_t seed) {
  const Rng base(seed);
  TrainTestSplit split{GenCircle(n_train, base.Split(kCircleTrainStream).NextU64()),
                       GenCircle(n_test, base.Split(kCircleTestStream).NextU64())};
  split.train.mutable_meta().seed = seed;
  split.train.mutable_meta().transforms.push_back("split(train,seed=" + std::to_string(seed) + ")");
  split.test.mutable_meta().seed = seed;
  split.test.mutable_meta().transforms.push_back("split(test,seed=" + std::to_string(seed) + ")");
  return split;
}

FraudProjection ProjectFraudCsv(const std::filesystem::path& csv) {
  const std::vector<FraudRow> rows = LoadFraudCsv(csv);
  FraudProjection out{FitPca(rows), LabeledDataset(2)};
  out.full = ApplyPca(out.pca, rows);
  out.full.mutable_meta().source = "fraud-csv:" + csv.string();
  return out;
}

}  // namespace sqnn::cli
