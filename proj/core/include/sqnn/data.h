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

// Labeled datasets: synthetic circle generation, Kaggle credit-card fraud
// ingestion, PCA reduction, balanced subsampling and the on-disk format.

#ifndef SQNN_DATA_H_
#define SQNN_DATA_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sqnn {

// Where a dataset came from and what was done to it, oldest step first.
struct DatasetMeta {
  std::string source;
  std::uint64_t seed = 0;
  std::vector<std::string> transforms;

  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

// Row-major feature matrix with binary labels. Each row carries the index it
// had in the dataset it was drawn from, so subsets can be compared by
// identity.
class LabeledDataset {
 public:
  explicit LabeledDataset(std::size_t dim, DatasetMeta meta = {});

  // Appends one row. Throws std::invalid_argument on wrong width,
  // non-finite features or a label outside {0, 1}.
  void Add(std::span<const double> features, int label, std::uint64_t row_id);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t dim() const { return dim_; }

  std::span<const double> Row(std::size_t i) const {
    return std::span<const double>(features_).subspan(i * dim_, dim_);
  }
  int Label(std::size_t i) const { return labels_[i]; }
  std::uint64_t RowId(std::size_t i) const { return row_ids_[i]; }
  std::size_t CountLabel(int label) const;

  const std::vector<double>& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::uint64_t>& row_ids() const { return row_ids_; }

  const DatasetMeta& meta() const { return meta_; }
  DatasetMeta& mutable_meta() { return meta_; }

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;

 private:
  std::size_t dim_;
  std::vector<double> features_;
  std::vector<int> labels_;
  std::vector<std::uint64_t> row_ids_;
  DatasetMeta meta_;
};

// ---------------------------------------------------------------------------
// Circle dataset

// Label of a point for the unit circle centred at the origin.
inline int CircleLabel(double x1, double x2) { return x1 * x1 + x2 * x2 < 1.0 ? 1 : 0; }

// n points uniform on [-1, 1]^2, label 1 strictly inside the unit circle.
// Draws are rejected once their class is full, giving ceil(n/2) inside and
// floor(n/2) outside points. Throws std::invalid_argument if n < 2.
LabeledDataset GenCircle(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Credit-card fraud data

inline constexpr std::size_t kFraudFeatureCount = 30;

struct FraudRow {
  double time = 0.0;
  std::array<double, 28> v{};
  double amount = 0.0;
  int label = 0;

  // (Time, V1, ..., V28, Amount), the column order of the CSV.
  std::array<double, kFraudFeatureCount> Features() const;
};

// Strict reader for the Kaggle creditcard.csv layout: a header row
// Time,V1..V28,Amount,Class (fields optionally double-quoted) followed by
// 31-field numeric rows. Throws IoError if the file cannot be read,
// FormatError for a missing or wrong header, ParseError with the 1-based line
// number for a malformed row.
std::vector<FraudRow> LoadFraudCsv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// PCA

// Projection onto the leading principal axes followed by per-axis min-max
// scaling to [-1, 1] (scaling fitted on the rows the model was fitted on).
struct PcaModel {
  std::vector<double> mean;                      // d_in
  std::vector<std::vector<double>> components;   // out_dim unit vectors of size d_in
  std::vector<double> explained_variance;        // eigenvalue per component
  double total_variance = 0.0;                   // trace of the covariance
  std::vector<double> scale_min;                 // out_dim
  std::vector<double> scale_max;                 // out_dim

  std::size_t input_dim() const { return mean.size(); }
  std::size_t output_dim() const { return components.size(); }

  // Fraction of the total variance captured by the kept components.
  double ExplainedVarianceRatio() const;

  std::vector<double> Project(std::span<const double> x) const;
  std::vector<double> Scale(std::span<const double> projected) const;
  std::vector<double> Unscale(std::span<const double> scaled) const;
  // mean + sum_j projected_j * component_j
  std::vector<double> BackProject(std::span<const double> projected) const;
  // Scale(Project(x))
  std::vector<double> Transform(std::span<const double> x) const;

  friend bool operator==(const PcaModel&, const PcaModel&) = default;
};

// Fits on a row-major matrix with rows of width dim. Components are the
// top-out_dim eigenvectors of the sample covariance, sign-normalized so the
// largest-magnitude entry is positive. Throws std::invalid_argument for
// fewer than 2 rows, out_dim outside [1, dim], or a degenerate projection
// (zero variance or zero spread along a kept component).
PcaModel FitPca(std::span<const double> rows, std::size_t dim, std::size_t out_dim = 2);
PcaModel FitPca(const std::vector<FraudRow>& rows, std::size_t out_dim = 2);

// Transforms every row; labels and row indices carry over.
LabeledDataset ApplyPca(const PcaModel& model, const std::vector<FraudRow>& rows);
LabeledDataset ApplyPca(const PcaModel& model, const LabeledDataset& data);

void SavePcaModel(const PcaModel& model, const std::filesystem::path& path);
PcaModel LoadPcaModel(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Sampling

struct TrainTestSplit {
  LabeledDataset train;
  LabeledDataset test;
};

// Disjoint train/test subsets drawn without replacement, each with exactly
// half positives. Throws std::invalid_argument for odd sizes or when either
// class has too few rows; the message names the deficit.
TrainTestSplit BalancedSample(const LabeledDataset& data, std::size_t n_train,
                              std::size_t n_test, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Storage

inline constexpr int kDatasetFormatVersion = 1;

// Text format with hex-float features (bit-exact round trip):
//
//   sqnn-dataset 1
//   source <text>
//   seed <u64>
//   transform <text>        (zero or more)
//   dim <d>
//   rows <m>
//   <row_id> <label> <x_1> ... <x_d>      (m lines)
//   end
void SaveDataset(const LabeledDataset& data, const std::filesystem::path& path);
// Throws IoError, FormatError (bad magic, version, truncation) or ParseError.
LabeledDataset LoadDataset(const std::filesystem::path& path);

// Shortest-round-trip hex-float rendering used by the text formats.
std::string FormatHexDouble(double v);
// Throws std::invalid_argument unless the whole token parses as a finite
// double.
double ParseDouble(std::string_view token);

}  // namespace sqnn

#endif  // SQNN_DATA_H_
