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

// Exact single-qubit linear algebra: states, gates, density matrices,
// fidelities and computational-basis probabilities. Everything here is a
// value type; all functions are pure.

#ifndef SQNN_QUANTUM_H_
#define SQNN_QUANTUM_H_

#include <array>
#include <complex>

namespace sqnn {

using Complex = std::complex<double>;

// Tolerances used by invariant checks throughout the library.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kFidelityCrossTolerance = 1e-9;

// Normalized amplitude pair a0|0> + a1|1>. Global phase is kept as given.
class QubitState {
 public:
  // Throws std::invalid_argument unless |a0|^2 + |a1|^2 = 1 within
  // kNormTolerance and both amplitudes are finite.
  QubitState(Complex a0, Complex a1);

  static QubitState Zero() { return QubitState(1.0, 0.0); }
  static QubitState One() { return QubitState(0.0, 1.0); }

  Complex a0() const { return a0_; }
  Complex a1() const { return a1_; }
  double Norm() const;

  // Multiplies both amplitudes by exp(i*gamma).
  QubitState WithGlobalPhase(double gamma) const;

 private:
  Complex a0_;
  Complex a1_;
};

// Row-major 2x2 complex matrix that is unitary within kUnitaryTolerance.
class GateMatrix {
 public:
  // Throws std::invalid_argument if the matrix is not unitary.
  explicit GateMatrix(const std::array<Complex, 4>& m);

  static GateMatrix Identity();

  Complex operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<Complex, 4>& data() const { return m_; }

  GateMatrix Adjoint() const;
  // Matrix product: (*this) * rhs, i.e. rhs acts first.
  GateMatrix operator*(const GateMatrix& rhs) const;

  // max_ij |(M^dagger M - I)_ij|
  double UnitarityError() const;

 private:
  struct Unchecked {};
  GateMatrix(const std::array<Complex, 4>& m, Unchecked) : m_(m) {}

  std::array<Complex, 4> m_;
};

// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class DensityMatrix {
 public:
  // Throws std::invalid_argument if any of the three properties is violated
  // beyond kDensityTolerance.
  explicit DensityMatrix(const std::array<Complex, 4>& m);

  static DensityMatrix FromState(const QubitState& state);
  static DensityMatrix MaximallyMixed();

  Complex operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<Complex, 4>& data() const { return m_; }

  double Trace() const;
  double Determinant() const;
  // Ascending pair of eigenvalues.
  std::array<double, 2> Eigenvalues() const;

 private:
  std::array<Complex, 4> m_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double Norm() const;
};

// General rotation U(theta, phi, lambda):
//   [ cos(t/2)            -e^{i l} sin(t/2)       ]
//   [ e^{i p} sin(t/2)     e^{i (p + l)} cos(t/2) ]
// Throws std::invalid_argument on non-finite angles.
GateMatrix MakeUGate(double theta, double phi, double lambda);

// Rz(t) = diag(e^{-it/2}, e^{it/2}); Ry(t) = U(t, 0, 0).
GateMatrix MakeRz(double angle);
GateMatrix MakeRy(double angle);

GateMatrix PauliX();
GateMatrix PauliY();
GateMatrix PauliZ();
GateMatrix Hadamard();

QubitState Apply(const GateMatrix& gate, const QubitState& state);

double Prob0(const QubitState& state);
double Prob1(const QubitState& state);

// <s1|s2>
Complex InnerProduct(const QubitState& s1, const QubitState& s2);

// |<s1|s2>|^2
double PureFidelity(const QubitState& s1, const QubitState& s2);

// Uhlmann fidelity (tr sqrt(sqrt(r) s sqrt(r)))^2 through the 2x2 closed form
// tr(r s) + 2 sqrt(det r * det s).
double MixedFidelity(const DensityMatrix& r, const DensityMatrix& s);

BlochVector ToBloch(const QubitState& state);

}  // namespace sqnn

#endif  // SQNN_QUANTUM_H_
