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

#include "sqnn/ansatz.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqnn {
namespace {

constexpr Complex kI(0.0, 1.0);

Mat2 UMatrix(double theta, double phi, double lambda) {
  double c = std::cos(0.5 * theta);
  double s = std::sin(0.5 * theta);
  return {c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)};
}

Mat2 UDerivative(int which, double theta, double phi, double lambda) {
  double c = std::cos(0.5 * theta);
  double s = std::sin(0.5 * theta);
  switch (which) {
    case 0:
      return {-0.5 * s, -std::polar(0.5 * c, lambda), std::polar(0.5 * c, phi),
              -std::polar(0.5 * s, phi + lambda)};
    case 1:
      return {0.0, 0.0, kI * std::polar(s, phi), kI * std::polar(c, phi + lambda)};
    default:
      return {0.0, -kI * std::polar(s, lambda), 0.0, kI * std::polar(c, phi + lambda)};
  }
}

Mat2 RzMatrix(double t) { return {std::polar(1.0, -0.5 * t), 0.0, 0.0, std::polar(1.0, 0.5 * t)}; }

Mat2 RzDerivative(double t) {
  return {-0.5 * kI * std::polar(1.0, -0.5 * t), 0.0, 0.0, 0.5 * kI * std::polar(1.0, 0.5 * t)};
}

Mat2 RyMatrix(double t) {
  double c = std::cos(0.5 * t);
  double s = std::sin(0.5 * t);
  return {c, -s, s, c};
}

Mat2 RyDerivative(double t) {
  double c = std::cos(0.5 * t);
  double s = std::sin(0.5 * t);
  return {-0.5 * s, -0.5 * c, 0.5 * c, -0.5 * s};
}

ParametricGate ConstantU(const std::array<double, 3>& angles) {
  ParametricGate g;
  g.kind = GateKind::kU;
  for (int k = 0; k < 3; ++k) g.angles[k].offset = angles[k];
  return g;
}

ParametricGate TrainableU(std::size_t first_param) {
  ParametricGate g;
  g.kind = GateKind::kU;
  for (int k = 0; k < 3; ++k) g.angles[k].Add(first_param + k, 1.0);
  return g;
}

}  // namespace

std::string_view ToString(LayerKind kind) {
  switch (kind) {
    case LayerKind::kUnitary:
      return "unitary";
    case LayerKind::kCompressedUnitary:
      return "compressed";
    case LayerKind::kUat:
      return "uat";
  }
  return "?";
}

std::string_view ToString(PrepKind kind) {
  switch (kind) {
    case PrepKind::kNone:
      return "none";
    case PrepKind::kHadamard:
      return "hadamard";
    case PrepKind::kTrainableU:
      return "u";
  }
  return "?";
}

LayerKind ParseLayerKind(std::string_view name) {
  for (LayerKind k : {LayerKind::kUnitary, LayerKind::kCompressedUnitary, LayerKind::kUat}) {
    if (name == ToString(k)) return k;
  }
  throw std::invalid_argument("unknown layer kind '" + std::string(name) +
                              "' (expected unitary, compressed or uat)");
}

PrepKind ParsePrepKind(std::string_view name) {
  for (PrepKind k : {PrepKind::kNone, PrepKind::kHadamard, PrepKind::kTrainableU}) {
    if (name == ToString(k)) return k;
  }
  throw std::invalid_argument("unknown preparation '" + std::string(name) +
                              "' (expected none, hadamard or u)");
}

void AnsatzSpec::Validate() const {
  if (n_layers < 1) {
    throw std::invalid_argument("AnsatzSpec: n_layers must be >= 1, got " +
                                std::to_string(n_layers));
  }
  if (input_dim < 1 || input_dim > kMaxInputDim) {
    throw std::invalid_argument("AnsatzSpec: input_dim must be in [1, 3], got " +
                                std::to_string(input_dim));
  }
}

std::size_t ParamsPerLayer(LayerKind kind) {
  switch (kind) {
    case LayerKind::kUnitary:
      return 3;
    case LayerKind::kCompressedUnitary:
      return 6;
    case LayerKind::kUat:
      return 5;
  }
  return 0;
}

std::size_t ParamCount(const AnsatzSpec& spec) {
  spec.Validate();
  std::size_t prep = spec.prep == PrepKind::kTrainableU ? 3 : 0;
  return prep + ParamsPerLayer(spec.layer_kind) * static_cast<std::size_t>(spec.n_layers);
}

int CircuitDepth(const AnsatzSpec& spec) {
  spec.Validate();
  int per_layer = spec.layer_kind == LayerKind::kCompressedUnitary ? 1 : 2;
  return per_layer * spec.n_layers + (spec.prep == PrepKind::kNone ? 0 : 1);
}

ParamRange PrepParamSlice(const AnsatzSpec& spec) {
  spec.Validate();
  return {0, spec.prep == PrepKind::kTrainableU ? std::size_t{3} : std::size_t{0}};
}

ParamRange LayerParamSlice(const AnsatzSpec& spec, int layer_index) {
  spec.Validate();
  if (layer_index < 0 || layer_index >= spec.n_layers) {
    throw std::invalid_argument("LayerParamSlice: layer index " + std::to_string(layer_index) +
                                " outside [0, " + std::to_string(spec.n_layers) + ")");
  }
  std::size_t width = ParamsPerLayer(spec.layer_kind);
  std::size_t begin = PrepParamSlice(spec).end + width * static_cast<std::size_t>(layer_index);
  return {begin, begin + width};
}

PaddedInput PaddedInput::From(std::span<const double> features) {
  if (features.size() > static_cast<std::size_t>(kMaxInputDim)) {
    throw std::invalid_argument("PaddedInput: " + std::to_string(features.size()) +
                                " features exceed the 3 available angle slots");
  }
  PaddedInput in;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (!std::isfinite(features[i])) {
      throw std::invalid_argument("PaddedInput: non-finite feature");
    }
    in.x[i] = features[i];
  }
  return in;
}

void AffineAngle::Add(std::size_t param, double coef) {
  if (n_terms >= kMaxTerms) throw std::logic_error("AffineAngle: too many terms");
  terms[n_terms++] = {param, coef};
}

double AffineAngle::Evaluate(std::span<const double> params) const {
  double v = offset;
  for (int t = 0; t < n_terms; ++t) v += terms[t].coef * params[terms[t].param];
  return v;
}

int ParametricGate::AngleCount() const {
  switch (kind) {
    case GateKind::kU:
      return 3;
    case GateKind::kRz:
    case GateKind::kRy:
      return 1;
    case GateKind::kFixed:
      return 0;
  }
  return 0;
}

Mat2 ParametricGate::Matrix(std::span<const double> params) const {
  switch (kind) {
    case GateKind::kU:
      return UMatrix(angles[0].Evaluate(params), angles[1].Evaluate(params),
                     angles[2].Evaluate(params));
    case GateKind::kRz:
      return RzMatrix(angles[0].Evaluate(params));
    case GateKind::kRy:
      return RyMatrix(angles[0].Evaluate(params));
    case GateKind::kFixed:
      return fixed;
  }
  return fixed;
}

Mat2 ParametricGate::AngleDerivative(int which, std::span<const double> params) const {
  switch (kind) {
    case GateKind::kU:
      return UDerivative(which, angles[0].Evaluate(params), angles[1].Evaluate(params),
                         angles[2].Evaluate(params));
    case GateKind::kRz:
      return RzDerivative(angles[0].Evaluate(params));
    case GateKind::kRy:
      return RyDerivative(angles[0].Evaluate(params));
    case GateKind::kFixed:
      break;
  }
  return Mat2{};
}

Circuit BuildCircuit(const AnsatzSpec& spec, std::span<const double> features) {
  spec.Validate();
  if (features.size() != static_cast<std::size_t>(spec.input_dim)) {
    std::ostringstream msg;
    msg << "BuildCircuit: expected " << spec.input_dim << " features, got " << features.size();
    throw std::invalid_argument(msg.str());
  }
  const std::array<double, 3> x = PaddedInput::From(features).x;

  Circuit circuit;
  circuit.n_params = ParamCount(spec);
  circuit.gates.reserve(static_cast<std::size_t>(CircuitDepth(spec)));

  switch (spec.prep) {
    case PrepKind::kNone:
      break;
    case PrepKind::kHadamard: {
      ParametricGate h;
      h.kind = GateKind::kFixed;
      const double r = 1.0 / std::numbers::sqrt2;
      h.fixed = {r, r, r, -r};
      circuit.gates.push_back(h);
      break;
    }
    case PrepKind::kTrainableU:
      circuit.gates.push_back(TrainableU(PrepParamSlice(spec).begin));
      break;
  }

  for (int layer = 0; layer < spec.n_layers; ++layer) {
    const std::size_t p = LayerParamSlice(spec, layer).begin;
    switch (spec.layer_kind) {
      case LayerKind::kUnitary:
        circuit.gates.push_back(ConstantU(x));
        circuit.gates.push_back(TrainableU(p));
        break;
      case LayerKind::kCompressedUnitary: {
        ParametricGate g;
        g.kind = GateKind::kU;
        for (int k = 0; k < 3; ++k) {
          g.angles[k].Add(p + k, 1.0);
          g.angles[k].Add(p + 3 + k, x[k]);
        }
        circuit.gates.push_back(g);
        break;
      }
      case LayerKind::kUat: {
        ParametricGate rz;
        rz.kind = GateKind::kRz;
        for (int k = 0; k < 3; ++k) rz.angles[0].Add(p + k, 2.0 * x[k]);
        rz.angles[0].Add(p + 3, 2.0);
        ParametricGate ry;
        ry.kind = GateKind::kRy;
        ry.angles[0].Add(p + 4, 2.0);
        circuit.gates.push_back(rz);
        circuit.gates.push_back(ry);
        break;
      }
    }
  }
  return circuit;
}

QubitState Forward(const AnsatzSpec& spec, const ParamVector& params,
                   std::span<const double> features) {
  const std::size_t expected = ParamCount(spec);
  if (params.size() != expected) {
    std::ostringstream msg;
    msg << "Forward: expected " << expected << " parameters, got " << params.size();
    throw std::invalid_argument(msg.str());
  }
  const Circuit circuit = BuildCircuit(spec, features);
  Complex a0 = 1.0;
  Complex a1 = 0.0;
  for (const ParametricGate& gate : circuit.gates) {
    const Mat2 m = gate.Matrix(params.view());
    const Complex b0 = m[0] * a0 + m[1] * a1;
    const Complex b1 = m[2] * a0 + m[3] * a1;
    a0 = b0;
    a1 = b1;
  }
  return QubitState(a0, a1);
}

}  // namespace sqnn
