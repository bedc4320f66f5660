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

#include "sqnn/data.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <Eigen/Dense>

#include "sqnn/errors.h"
#include "sqnn/random.h"

namespace sqnn {
namespace {

constexpr std::string_view kDatasetMagic = "sqnn-dataset";
constexpr std::string_view kPcaMagic = "sqnn-pca";
constexpr int kPcaFormatVersion = 1;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::string_view Unquote(std::string_view s) {
  s = Trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> SplitOn(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t ParseU64(std::string_view token) {
  std::string s(token);
  if (s.empty() || s[0] == '-' || s[0] == '+') throw std::invalid_argument("bad integer '" + s + "'");
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) {
    throw std::invalid_argument("bad integer '" + s + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

// Reads "<key> <rest>" and returns rest; FormatError if the key differs.
std::string ExpectKey(std::istream& in, std::string_view key, std::size_t& line_no) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError("truncated file: expected '" + std::string(key) + "'");
  }
  ++line_no;
  std::string_view view = Trim(line);
  if (view.substr(0, key.size()) != key ||
      (view.size() > key.size() && view[key.size()] != ' ')) {
    throw FormatError("line " + std::to_string(line_no) + ": expected '" + std::string(key) + "'");
  }
  return std::string(view.size() > key.size() ? view.substr(key.size() + 1) : std::string_view{});
}

}  // namespace

std::string FormatHexDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double ParseDouble(std::string_view token) {
  std::string s(Trim(token));
  if (s.empty()) throw std::invalid_argument("empty numeric field");
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  return v;
}

LabeledDataset::LabeledDataset(std::size_t dim, DatasetMeta meta) : dim_(dim), meta_(std::move(meta)) {
  if (dim == 0) throw std::invalid_argument("LabeledDataset: dim must be positive");
}

void LabeledDataset::Add(std::span<const double> features, int label, std::uint64_t row_id) {
  if (features.size() != dim_) {
    throw std::invalid_argument("LabeledDataset: row has " + std::to_string(features.size()) +
                                " features, expected " + std::to_string(dim_));
  }
  if (label != 0 && label != 1) {
    throw std::invalid_argument("LabeledDataset: label must be 0 or 1, got " + std::to_string(label));
  }
  for (double v : features) {
    if (!std::isfinite(v)) throw std::invalid_argument("LabeledDataset: non-finite feature");
  }
  features_.insert(features_.end(), features.begin(), features.end());
  labels_.push_back(label);
  row_ids_.push_back(row_id);
}

std::size_t LabeledDataset::CountLabel(int label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

LabeledDataset GenCircle(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("GenCircle: need at least 2 points");
  LabeledDataset data(2, {"circle", seed, {"gen_circle(n=" + std::to_string(n) + ",radius=1)"}});
  std::array<std::size_t, 2> remaining = {n / 2, n - n / 2};  // {outside, inside}
  Rng rng(seed);
  std::uint64_t id = 0;
  while (remaining[0] + remaining[1] > 0) {
    const std::array<double, 2> x = {rng.Uniform(-1.0, 1.0), rng.Uniform(-1.0, 1.0)};
    const int label = CircleLabel(x[0], x[1]);
    if (remaining[label] == 0) continue;
    --remaining[label];
    data.Add(x, label, id++);
  }
  return data;
}

std::array<double, kFraudFeatureCount> FraudRow::Features() const {
  std::array<double, kFraudFeatureCount> f{};
  f[0] = time;
  std::copy(v.begin(), v.end(), f.begin() + 1);
  f[29] = amount;
  return f;
}

std::vector<FraudRow> LoadFraudCsv(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::string line;
  if (!std::getline(in, line) || Trim(line).empty()) {
    throw FormatError("'" + path.string() + "': empty file, expected a header row");
  }
  const auto header = SplitOn(Trim(line), ',');
  std::vector<std::string> expected = {"Time"};
  for (int i = 1; i <= 28; ++i) expected.push_back("V" + std::to_string(i));
  expected.push_back("Amount");
  expected.push_back("Class");
  bool header_ok = header.size() == expected.size();
  for (std::size_t i = 0; header_ok && i < header.size(); ++i) {
    header_ok = Unquote(header[i]) == expected[i];
  }
  if (!header_ok) {
    throw FormatError("'" + path.string() +
                      "': header must be Time,V1..V28,Amount,Class (31 columns)");
  }

  std::vector<FraudRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty()) {
      // A trailing newline at EOF is fine; a blank line in the middle is not.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "blank line");
    }
    const auto fields = SplitOn(view, ',');
    if (fields.size() != expected.size()) {
      throw ParseError(line_no, "expected 31 fields, got " + std::to_string(fields.size()));
    }
    FraudRow row;
    try {
      row.time = ParseDouble(Unquote(fields[0]));
      for (std::size_t i = 0; i < 28; ++i) row.v[i] = ParseDouble(Unquote(fields[1 + i]));
      row.amount = ParseDouble(Unquote(fields[29]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    std::string_view cls = Unquote(fields[30]);
    if (cls == "0") {
      row.label = 0;
    } else if (cls == "1") {
      row.label = 1;
    } else {
      throw ParseError(line_no, "class must be 0 or 1, got '" + std::string(cls) + "'");
    }
    rows.push_back(row);
  }
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return rows;
}

double PcaModel::ExplainedVarianceRatio() const {
  double kept = 0.0;
  for (double v : explained_variance) kept += v;
  return total_variance > 0.0 ? kept / total_variance : 0.0;
}

std::vector<double> PcaModel::Project(std::span<const double> x) const {
  if (x.size() != input_dim()) {
    throw std::invalid_argument("PcaModel: input has " + std::to_string(x.size()) +
                                " features, model expects " + std::to_string(input_dim()));
  }
  std::vector<double> out(output_dim(), 0.0);
  for (std::size_t j = 0; j < output_dim(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < input_dim(); ++i) acc += components[j][i] * (x[i] - mean[i]);
    out[j] = acc;
  }
  return out;
}

std::vector<double> PcaModel::Scale(std::span<const double> projected) const {
  std::vector<double> out(projected.size());
  for (std::size_t j = 0; j < projected.size(); ++j) {
    out[j] = 2.0 * (projected[j] - scale_min[j]) / (scale_max[j] - scale_min[j]) - 1.0;
  }
  return out;
}

std::vector<double> PcaModel::Unscale(std::span<const double> scaled) const {
  std::vector<double> out(scaled.size());
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    out[j] = scale_min[j] + 0.5 * (scaled[j] + 1.0) * (scale_max[j] - scale_min[j]);
  }
  return out;
}

std::vector<double> PcaModel::BackProject(std::span<const double> projected) const {
  std::vector<double> out = mean;
  for (std::size_t j = 0; j < projected.size(); ++j) {
    for (std::size_t i = 0; i < input_dim(); ++i) out[i] += projected[j] * components[j][i];
  }
  return out;
}

std::vector<double> PcaModel::Transform(std::span<const double> x) const {
  return Scale(Project(x));
}

PcaModel FitPca(std::span<const double> rows, std::size_t dim, std::size_t out_dim) {
  if (dim == 0 || rows.size() % dim != 0) {
    throw std::invalid_argument("FitPca: matrix size is not a multiple of the row width");
  }
  const std::size_t n = rows.size() / dim;
  if (n < 2) throw std::invalid_argument("FitPca: need at least 2 rows");
  if (out_dim < 1 || out_dim > dim) {
    throw std::invalid_argument("FitPca: out_dim must be in [1, " + std::to_string(dim) + "]");
  }

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> x(
      rows.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw std::runtime_error("FitPca: eigensolver failed");

  PcaModel model;
  model.mean.assign(mean.data(), mean.data() + dim);
  model.total_variance = cov.trace();
  if (!(model.total_variance > 0.0)) throw std::invalid_argument("FitPca: zero-variance input");

  const double floor = 1e-12 * model.total_variance;
  for (std::size_t j = 0; j < out_dim; ++j) {
    // Eigen sorts eigenvalues ascending.
    const Eigen::Index col = static_cast<Eigen::Index>(dim - 1 - j);
    const double lambda = solver.eigenvalues()(col);
    if (lambda <= floor) {
      throw std::invalid_argument("FitPca: rank-deficient input, component " + std::to_string(j) +
                                  " has no variance");
    }
    Eigen::VectorXd v = solver.eigenvectors().col(col);
    Eigen::Index arg_max = 0;
    v.cwiseAbs().maxCoeff(&arg_max);
    if (v(arg_max) < 0.0) v = -v;
    model.components.emplace_back(v.data(), v.data() + dim);
    model.explained_variance.push_back(lambda);
  }

  model.scale_min.assign(out_dim, INFINITY);
  model.scale_max.assign(out_dim, -INFINITY);
  for (std::size_t r = 0; r < n; ++r) {
    const auto p = model.Project(rows.subspan(r * dim, dim));
    for (std::size_t j = 0; j < out_dim; ++j) {
      model.scale_min[j] = std::min(model.scale_min[j], p[j]);
      model.scale_max[j] = std::max(model.scale_max[j], p[j]);
    }
  }
  for (std::size_t j = 0; j < out_dim; ++j) {
    if (!(model.scale_max[j] > model.scale_min[j])) {
      throw std::invalid_argument("FitPca: zero spread along component " + std::to_string(j));
    }
  }
  return model;
}

PcaModel FitPca(const std::vector<FraudRow>& rows, std::size_t out_dim) {
  std::vector<double> flat;
  flat.reserve(rows.size() * kFraudFeatureCount);
  for (const FraudRow& row : rows) {
    const auto f = row.Features();
    flat.insert(flat.end(), f.begin(), f.end());
  }
  return FitPca(flat, kFraudFeatureCount, out_dim);
}

LabeledDataset ApplyPca(const PcaModel& model, const std::vector<FraudRow>& rows) {
  LabeledDataset out(model.output_dim(), {"fraud-csv", 0, {"pca(raw covariance,minmax[-1,1])"}});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto f = rows[r].Features();
    out.Add(model.Transform(f), rows[r].label, r);
  }
  return out;
}

LabeledDataset ApplyPca(const PcaModel& model, const LabeledDataset& data) {
  DatasetMeta meta = data.meta();
  meta.transforms.push_back("pca(raw covariance,minmax[-1,1])");
  LabeledDataset out(model.output_dim(), meta);
  for (std::size_t r = 0; r < data.size(); ++r) {
    out.Add(model.Transform(data.Row(r)), data.Label(r), data.RowId(r));
  }
  return out;
}

void SavePcaModel(const PcaModel& model, const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  out << kPcaMagic << ' ' << kPcaFormatVersion << '\n';
  out << "input_dim " << model.input_dim() << '\n';
  out << "output_dim " << model.output_dim() << '\n';
  out << "total_variance " << FormatHexDouble(model.total_variance) << '\n';
  auto write_vec = [&out](std::string_view key, const std::vector<double>& v) {
    out << key;
    for (double x : v) out << ' ' << FormatHexDouble(x);
    out << '\n';
  };
  write_vec("mean", model.mean);
  write_vec("explained_variance", model.explained_variance);
  write_vec("scale_min", model.scale_min);
  write_vec("scale_max", model.scale_max);
  for (const auto& c : model.components) write_vec("component", c);
  out << "end\n";
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

PcaModel LoadPcaModel(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::size_t line_no = 0;
  const std::string version = ExpectKey(in, kPcaMagic, line_no);
  if (version != std::to_string(kPcaFormatVersion)) {
    throw FormatError("unsupported PCA model version '" + version + "'");
  }
  auto read_vec = [&](std::string_view key, std::size_t expected) {
    const std::string rest = ExpectKey(in, key, line_no);
    std::vector<double> v;
    try {
      for (std::string_view tok : Tokens(rest)) v.push_back(ParseDouble(tok));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (v.size() != expected) throw ParseError(line_no, "wrong number of values for " + std::string(key));
    return v;
  };
  PcaModel model;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  try {
    in_dim = ParseU64(ExpectKey(in, "input_dim", line_no));
    out_dim = ParseU64(ExpectKey(in, "output_dim", line_no));
    model.total_variance = ParseDouble(ExpectKey(in, "total_variance", line_no));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  model.mean = read_vec("mean", in_dim);
  model.explained_variance = read_vec("explained_variance", out_dim);
  model.scale_min = read_vec("scale_min", out_dim);
  model.scale_max = read_vec("scale_max", out_dim);
  for (std::size_t j = 0; j < out_dim; ++j) model.components.push_back(read_vec("component", in_dim));
  ExpectKey(in, "end", line_no);
  return model;
}

TrainTestSplit BalancedSample(const LabeledDataset& data, std::size_t n_train, std::size_t n_test,
                              std::uint64_t seed) {
  if (n_train % 2 != 0 || n_test % 2 != 0 || n_train == 0 || n_test == 0) {
    throw std::invalid_argument("BalancedSample: train and test sizes must be positive and even");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < data.size(); ++i) by_class[data.Label(i)].push_back(i);

  const std::size_t per_class = n_train / 2 + n_test / 2;
  for (int label : {1, 0}) {
    const std::size_t have = by_class[label].size();
    if (have < per_class) {
      std::ostringstream msg;
      msg << "BalancedSample: need " << per_class << (label == 1 ? " positive" : " negative")
          << " rows, have " << have << " (deficit " << per_class - have << ")";
      throw std::invalid_argument(msg.str());
    }
  }

  Rng rng(seed);
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  for (int label : {0, 1}) {
    auto& pool = by_class[label];
    rng.Shuffle(pool.begin(), pool.end());
    train_rows.insert(train_rows.end(), pool.begin(), pool.begin() + n_train / 2);
    test_rows.insert(test_rows.end(), pool.begin() + n_train / 2, pool.begin() + per_class);
  }
  rng.Shuffle(train_rows.begin(), train_rows.end());
  rng.Shuffle(test_rows.begin(), test_rows.end());

  auto build = [&](const std::vector<std::size_t>& rows, std::string_view part) {
    DatasetMeta meta = data.meta();
    std::ostringstream step;
    step << "balanced_sample(train=" << n_train << ",test=" << n_test << ",seed=" << seed
         << ",part=" << part << ")";
    meta.transforms.push_back(step.str());
    meta.seed = seed;
    LabeledDataset out(data.dim(), meta);
    for (std::size_t r : rows) out.Add(data.Row(r), data.Label(r), data.RowId(r));
    return out;
  };
  return {build(train_rows, "train"), build(test_rows, "test")};
}

void SaveDataset(const LabeledDataset& data, const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  out << kDatasetMagic << ' ' << kDatasetFormatVersion << '\n';
  out << "source " << data.meta().source << '\n';
  out << "seed " << data.meta().seed << '\n';
  for (const std::string& t : data.meta().transforms) out << "transform " << t << '\n';
  out << "dim " << data.dim() << '\n';
  out << "rows " << data.size() << '\n';
  for (std::size_t r = 0; r < data.size(); ++r) {
    out << data.RowId(r) << ' ' << data.Label(r);
    for (double v : data.Row(r)) out << ' ' << FormatHexDouble(v);
    out << '\n';
  }
  out << "end\n";
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

LabeledDataset LoadDataset(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::size_t line_no = 0;
  std::string line;
  if (!std::getline(in, line)) throw FormatError("'" + path.string() + "': empty file");
  ++line_no;
  const auto magic = Tokens(line);
  if (magic.size() != 2 || magic[0] != kDatasetMagic) {
    throw FormatError("'" + path.string() + "': not a dataset file");
  }
  if (magic[1] != std::to_string(kDatasetFormatVersion)) {
    throw FormatError("'" + path.string() + "': unsupported dataset version '" +
                      std::string(magic[1]) + "'");
  }

  DatasetMeta meta;
  meta.source = ExpectKey(in, "source", line_no);
  try {
    meta.seed = ParseU64(ExpectKey(in, "seed", line_no));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  std::size_t dim = 0;
  while (true) {
    if (!std::getline(in, line)) throw FormatError("truncated file: missing 'dim'");
    ++line_no;
    std::string_view view = Trim(line);
    if (view.starts_with("transform ")) {
      meta.transforms.emplace_back(view.substr(10));
      continue;
    }
    if (!view.starts_with("dim ")) throw FormatError("line " + std::to_string(line_no) + ": expected 'dim'");
    try {
      dim = ParseU64(view.substr(4));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    break;
  }
  if (dim == 0) throw ParseError(line_no, "dim must be positive");
  std::size_t n_rows = 0;
  try {
    n_rows = ParseU64(ExpectKey(in, "rows", line_no));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }

  LabeledDataset data(dim, std::move(meta));
  std::vector<double> row(dim);
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!std::getline(in, line)) {
      throw FormatError("truncated file: " + std::to_string(r) + " of " + std::to_string(n_rows) +
                        " rows present");
    }
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.size() != dim + 2) {
      throw ParseError(line_no, "expected " + std::to_string(dim + 2) + " fields, got " +
                                    std::to_string(tokens.size()));
    }
    try {
      const std::uint64_t id = ParseU64(tokens[0]);
      const std::uint64_t label = ParseU64(tokens[1]);
      for (std::size_t j = 0; j < dim; ++j) row[j] = ParseDouble(tokens[2 + j]);
      data.Add(row, static_cast<int>(std::min<std::uint64_t>(label, 2)), id);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!std::getline(in, line) || Trim(line) != "end") {
    throw FormatError("truncated file: missing 'end' marker");
  }
  return data;
}

}  // namespace sqnn
