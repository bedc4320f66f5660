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

#include "sqnn/quantum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqnn {
namespace {

bool IsFinite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void RequireFiniteAngle(double angle, const char* what) {
  if (!std::isfinite(angle)) {
    std::ostringstream msg;
    msg << what << ": non-finite angle " << angle;
    throw std::invalid_argument(msg.str());
  }
}

double UnitarityErrorOf(const std::array<Complex, 4>& m) {
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // (M^dagger M)_ij = sum_k conj(M_ki) M_kj
      Complex sum = std::conj(m[i]) * m[j] + std::conj(m[2 + i]) * m[2 + j];
      if (i == j) sum -= 1.0;
      err = std::max(err, std::abs(sum));
    }
  }
  return err;
}

}  // namespace

QubitState::QubitState(Complex a0, Complex a1) : a0_(a0), a1_(a1) {
  if (!IsFinite(a0) || !IsFinite(a1)) {
    throw std::invalid_argument("QubitState: non-finite amplitude");
  }
  double n = std::norm(a0) + std::norm(a1);
  if (std::abs(n - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "QubitState: squared norm " << n << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
}

double QubitState::Norm() const { return std::sqrt(std::norm(a0_) + std::norm(a1_)); }

QubitState QubitState::WithGlobalPhase(double gamma) const {
  Complex phase = std::polar(1.0, gamma);
  return QubitState(phase * a0_, phase * a1_);
}

GateMatrix::GateMatrix(const std::array<Complex, 4>& m) : m_(m) {
  for (const Complex& z : m_) {
    if (!IsFinite(z)) throw std::invalid_argument("GateMatrix: non-finite entry");
  }
  double err = UnitarityErrorOf(m_);
  if (err > kUnitaryTolerance) {
    std::ostringstream msg;
    msg << "GateMatrix: not unitary (error " << err << ")";
    throw std::invalid_argument(msg.str());
  }
}

GateMatrix GateMatrix::Identity() { return GateMatrix({1.0, 0.0, 0.0, 1.0}, Unchecked{}); }

GateMatrix GateMatrix::Adjoint() const {
  return GateMatrix({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])},
                    Unchecked{});
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  const auto& a = m_;
  const auto& b = rhs.m_;
  return GateMatrix({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                     a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

double GateMatrix::UnitarityError() const { return UnitarityErrorOf(m_); }

DensityMatrix::DensityMatrix(const std::array<Complex, 4>& m) : m_(m) {
  for (const Complex& z : m_) {
    if (!IsFinite(z)) throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  if (std::abs(m_[1] - std::conj(m_[2])) > kDensityTolerance ||
      std::abs(m_[0].imag()) > kDensityTolerance || std::abs(m_[3].imag()) > kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(Trace() - 1.0) > kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  if (Eigenvalues()[0] < -kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::FromState(const QubitState& state) {
  Complex a0 = state.a0();
  Complex a1 = state.a1();
  return DensityMatrix(
      {a0 * std::conj(a0), a0 * std::conj(a1), a1 * std::conj(a0), a1 * std::conj(a1)});
}

DensityMatrix DensityMatrix::MaximallyMixed() { return DensityMatrix({0.5, 0.0, 0.0, 0.5}); }

double DensityMatrix::Trace() const { return m_[0].real() + m_[3].real(); }

double DensityMatrix::Determinant() const { return (m_[0] * m_[3] - m_[1] * m_[2]).real(); }

std::array<double, 2> DensityMatrix::Eigenvalues() const {
  double a = m_[0].real();
  double d = m_[3].real();
  double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m_[1]));
  double mid = 0.5 * (a + d);
  return {mid - half_gap, mid + half_gap};
}

double BlochVector::Norm() const { return std::sqrt(x * x + y * y + z * z); }

GateMatrix MakeUGate(double theta, double phi, double lambda) {
  RequireFiniteAngle(theta, "MakeUGate");
  RequireFiniteAngle(phi, "MakeUGate");
  RequireFiniteAngle(lambda, "MakeUGate");
  double c = std::cos(0.5 * theta);
  double s = std::sin(0.5 * theta);
  return GateMatrix({c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda)});
}

GateMatrix MakeRz(double angle) {
  RequireFiniteAngle(angle, "MakeRz");
  return GateMatrix({std::polar(1.0, -0.5 * angle), 0.0, 0.0, std::polar(1.0, 0.5 * angle)});
}

GateMatrix MakeRy(double angle) {
  RequireFiniteAngle(angle, "MakeRy");
  return MakeUGate(angle, 0.0, 0.0);
}

GateMatrix PauliX() { return GateMatrix({0.0, 1.0, 1.0, 0.0}); }
GateMatrix PauliY() { return GateMatrix({0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
GateMatrix PauliZ() { return GateMatrix({1.0, 0.0, 0.0, -1.0}); }

GateMatrix Hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return GateMatrix({r, r, r, -r});
}

QubitState Apply(const GateMatrix& gate, const QubitState& state) {
  return QubitState(gate(0, 0) * state.a0() + gate(0, 1) * state.a1(),
                    gate(1, 0) * state.a0() + gate(1, 1) * state.a1());
}

double Prob0(const QubitState& state) { return std::norm(state.a0()); }
double Prob1(const QubitState& state) { return std::norm(state.a1()); }

Complex InnerProduct(const QubitState& s1, const QubitState& s2) {
  return std::conj(s1.a0()) * s2.a0() + std::conj(s1.a1()) * s2.a1();
}

double PureFidelity(const QubitState& s1, const QubitState& s2) {
  return std::clamp(std::norm(InnerProduct(s1, s2)), 0.0, 1.0);
}

double MixedFidelity(const DensityMatrix& r, const DensityMatrix& s) {
  // tr(r s) is real for Hermitian r, s.
  double overlap = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) overlap += (r(i, k) * s(k, i)).real();
  }
  double det_product = std::max(r.Determinant(), 0.0) * std::max(s.Determinant(), 0.0);
  return std::clamp(overlap + 2.0 * std::sqrt(det_product), 0.0, 1.0);
}

BlochVector ToBloch(const QubitState& state) {
  // <X> = 2 Re(conj(a0) a1), <Y> = 2 Im(conj(a0) a1), <Z> = |a0|^2 - |a1|^2.
  Complex coherence = std::conj(state.a0()) * state.a1();
  return {2.0 * coherence.real(), 2.0 * coherence.imag(), Prob0(state) - Prob1(state)};
}

}  // namespace sqnn
