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

#include "sqnn/cli/records.h"

#include <fstream>

#include "sqnn/errors.h"

namespace sqnn::cli {
namespace {

using nlohmann::json;

json OptionalToJson(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("model record: missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("model record: bad '") + key + "': " + e.what());
  }
}

}  // namespace

json ModelToJson(const TrainedModel& model) {
  if (const auto* q = std::get_if<TrainedModel::Quantum>(&model.model)) {
    return {
        {"family", "quantum"},
        {"layer", ToString(q->spec.layer_kind)},
        {"layers", q->spec.n_layers},
        {"prep", ToString(q->spec.prep)},
        {"input_dim", q->spec.input_dim},
        {"param_count", ParamCount(q->spec)},
        {"depth", CircuitDepth(q->spec)},
        {"threshold", q->classifier.threshold},
        {"params", q->params.values()},
    };
  }
  const auto& c = std::get<TrainedModel::Classical>(model.model);
  return {
      {"family", "classical"},
      {"input_dim", c.spec.input_dim},
      {"hidden", c.spec.hidden_units},
      {"param_count", MlpParamCount(c.spec)},
      {"params", c.params.Flatten()},
  };
}

TrainedModel ModelFromJson(const json& record) {
  const json& j = record.contains("model") ? record.at("model") : record;
  const auto family = Field<std::string>(j, "family");
  TrainedModel model;
  try {
    if (family == "quantum") {
      TrainedModel::Quantum q;
      q.spec.layer_kind = ParseLayerKind(Field<std::string>(j, "layer"));
      q.spec.n_layers = Field<int>(j, "layers");
      q.spec.prep = ParsePrepKind(Field<std::string>(j, "prep"));
      q.spec.input_dim = Field<int>(j, "input_dim");
      q.spec.Validate();
      q.classifier.threshold = Field<double>(j, "threshold");
      q.classifier.Validate();
      q.params = ParamVector(Field<std::vector<double>>(j, "params"));
      if (q.params.size() != ParamCount(q.spec)) {
        throw FormatError("model record: parameter count does not match the ansatz");
      }
      model.model = std::move(q);
    } else if (family == "classical") {
      TrainedModel::Classical c;
      c.spec.input_dim = Field<int>(j, "input_dim");
      c.spec.hidden_units = Field<int>(j, "hidden");
      c.spec.Validate();
      c.params = MlpParams::Unflatten(c.spec, Field<std::vector<double>>(j, "params"));
      model.model = std::move(c);
    } else {
      throw FormatError("model record: unknown family '" + family + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("model record: ") + e.what());
  }
  return model;
}

json MetricsToJson(const SplitMetrics& m) {
  return {
      {"tp", m.confusion.tp},
      {"tn", m.confusion.tn},
      {"fp", m.confusion.fp},
      {"fn", m.confusion.fn},
      {"accuracy", OptionalToJson(m.accuracy)},
      {"precision", OptionalToJson(m.precision)},
      {"recall", OptionalToJson(m.recall)},
  };
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

void WriteJsonFile(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace sqnn::cli
