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

// Data re-uploading circuit families for a single qubit.
//
// A circuit starts from |0>, applies an optional preparation gate and then
// n_layers processing layers. Three layer formulations are supported:
//
//   Unitary            L(i) = U(phi_i) U(x)
//   CompressedUnitary  L(i) = U(theta_i + w_i o x)        (o: elementwise)
//   Uat                L(i) = Ry(2 varphi_i) Rz(2 w_i . x + 2 alpha_i)
//
// Inputs of dimension < 3 are padded with zeros to three components.
//
// Flat parameter layout: [prep (3, TrainableU only)] [layer 0] [layer 1] ...
//   Unitary layer:            (phi1, phi2, phi3)
//   CompressedUnitary layer:  (theta1, theta2, theta3, w1, w2, w3)
//   Uat layer:                (w1, w2, w3, alpha, varphi)

#ifndef SQNN_ANSATZ_H_
#define SQNN_ANSATZ_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqnn/quantum.h"

namespace sqnn {

enum class LayerKind { kUnitary, kCompressedUnitary, kUat };
enum class PrepKind { kNone, kHadamard, kTrainableU };

std::string_view ToString(LayerKind kind);
std::string_view ToString(PrepKind kind);
// Accepts the ToString() names. Throws std::invalid_argument otherwise.
LayerKind ParseLayerKind(std::string_view name);
PrepKind ParsePrepKind(std::string_view name);

inline constexpr int kMaxInputDim = 3;

struct AnsatzSpec {
  LayerKind layer_kind = LayerKind::kUnitary;
  int n_layers = 1;
  PrepKind prep = PrepKind::kNone;
  int input_dim = 2;

  // Throws std::invalid_argument unless n_layers >= 1 and
  // 1 <= input_dim <= kMaxInputDim.
  void Validate() const;

  friend bool operator==(const AnsatzSpec&, const AnsatzSpec&) = default;
};

// Trainable parameters of one ansatz, in the flat layout above.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> view() const { return values_; }
  std::span<double> view() { return values_; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const ParamVector&, const ParamVector&) = default;

 private:
  std::vector<double> values_;
};

// Half-open index range [begin, end) into a ParamVector.
struct ParamRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

std::size_t ParamsPerLayer(LayerKind kind);
std::size_t ParamCount(const AnsatzSpec& spec);
int CircuitDepth(const AnsatzSpec& spec);

// Slots owned by layer layer_index. Throws std::invalid_argument when the
// index is outside [0, n_layers).
ParamRange LayerParamSlice(const AnsatzSpec& spec, int layer_index);
// Slots of the trainable preparation gate; empty unless prep == kTrainableU.
ParamRange PrepParamSlice(const AnsatzSpec& spec);

// Input zero-padded to three angle slots.
struct PaddedInput {
  std::array<double, 3> x{};

  // Throws std::invalid_argument for non-finite components or more than
  // kMaxInputDim components.
  static PaddedInput From(std::span<const double> features);
};

// ---------------------------------------------------------------------------
// Parametric circuit representation. Every gate angle is an affine function
// of the flat parameters, with coefficients that may depend on the input.
// Forward evaluation and analytic differentiation share this description.

using Mat2 = std::array<Complex, 4>;

enum class GateKind { kU, kRz, kRy, kFixed };

struct AngleTerm {
  std::size_t param = 0;
  double coef = 0.0;
};

struct AffineAngle {
  static constexpr int kMaxTerms = 4;

  double offset = 0.0;
  std::array<AngleTerm, kMaxTerms> terms{};
  int n_terms = 0;

  void Add(std::size_t param, double coef);
  double Evaluate(std::span<const double> params) const;
};

struct ParametricGate {
  GateKind kind = GateKind::kFixed;
  // kU uses all three angles (theta, phi, lambda); kRz/kRy use angles[0].
  std::array<AffineAngle, 3> angles{};
  Mat2 fixed{};

  int AngleCount() const;
  Mat2 Matrix(std::span<const double> params) const;
  // d(Matrix)/d(angles[which]) at the given parameters.
  Mat2 AngleDerivative(int which, std::span<const double> params) const;
};

// Gates listed in application order (first element acts first on |0>).
struct Circuit {
  std::vector<ParametricGate> gates;
  std::size_t n_params = 0;
};

Circuit BuildCircuit(const AnsatzSpec& spec, std::span<const double> features);

// Evaluates the circuit on |0>. Throws std::invalid_argument if the
// parameter count does not match the spec or the input is invalid.
QubitState Forward(const AnsatzSpec& spec, const ParamVector& params,
                   std::span<const double> features);

}  // namespace sqnn

#endif  // SQNN_ANSATZ_H_
