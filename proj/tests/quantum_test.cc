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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_util.h"

namespace sqnn {
namespace {

using testing::C;
using testing::EulerU;
using testing::MaxDiff;
using testing::RandomAngle;
using testing::RandomState;

constexpr double kPi = std::numbers::pi;

TEST(QubitStateTest, RejectsUnnormalized) {
  EXPECT_THROW(QubitState(1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(QubitState(0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(QubitState(std::nan(""), 0.0), std::invalid_argument);
  EXPECT_NO_THROW(QubitState(1.0 / std::sqrt(2.0), C(0, 1.0 / std::sqrt(2.0))));
}

TEST(QubitStateTest, BasisStates) {
  EXPECT_EQ(Prob0(QubitState::Zero()), 1.0);
  EXPECT_EQ(Prob1(QubitState::One()), 1.0);
  EXPECT_EQ(PureFidelity(QubitState::Zero(), QubitState::One()), 0.0);
}

TEST(GateTest, RejectsNonUnitary) {
  EXPECT_THROW(GateMatrix({1.0, 1.0, 0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(MakeUGate(std::nan(""), 0, 0), std::invalid_argument);
  EXPECT_THROW(MakeRz(INFINITY), std::invalid_argument);
  EXPECT_THROW(MakeRy(-INFINITY), std::invalid_argument);
}

TEST(GateTest, UGateMatchesEulerDecomposition) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const double t = RandomAngle(gen), p = RandomAngle(gen), l = RandomAngle(gen);
    EXPECT_LT(MaxDiff(EulerU(t, p, l), MakeUGate(t, p, l).data()), 1e-12);
  }
}

TEST(GateTest, KnownMatrices) {
  // U(pi, 0, pi) = X, U(pi/2, 0, pi) = H.
  EXPECT_LT(MaxDiff(PauliX().data(), MakeUGate(kPi, 0, kPi).data()), 1e-15);
  EXPECT_LT(MaxDiff(Hadamard().data(), MakeUGate(kPi / 2, 0, kPi).data()), 1e-15);
  const GateMatrix ry = MakeRy(kPi);
  EXPECT_NEAR(std::abs(ry(1, 0) - 1.0), 0.0, 1e-15);
  const GateMatrix rz = MakeRz(kPi);
  EXPECT_LT(std::abs(rz(0, 0) - C(0, -1)), 1e-15);
  EXPECT_LT(std::abs(rz(1, 1) - C(0, 1)), 1e-15);
}

TEST(GateTest, PauliAlgebra) {
  // XY = iZ
  const GateMatrix xy = PauliX() * PauliY();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) EXPECT_LT(std::abs(xy(i, j) - C(0, 1) * PauliZ()(i, j)), 1e-15);
  }
  const GateMatrix hh = Hadamard() * Hadamard();
  EXPECT_LT(MaxDiff(hh.data(), GateMatrix::Identity().data()), 1e-15);
}

TEST(GateTest, RandomGatesAreUnitaryAndPreserveNorm) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 1000; ++i) {
    const GateMatrix g = MakeUGate(RandomAngle(gen), RandomAngle(gen), RandomAngle(gen));
    EXPECT_LE(g.UnitarityError(), 1e-10);
    const QubitState s = Apply(g, RandomState(gen));
    EXPECT_NEAR(s.Norm(), 1.0, 1e-10);
    EXPECT_LE((g * g.Adjoint()).UnitarityError(), 1e-10);
  }
}

TEST(GateTest, RzOnZeroIsTrivial) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100; ++i) {
    const QubitState s = Apply(MakeRz(RandomAngle(gen, 100.0)), QubitState::Zero());
    EXPECT_NEAR(Prob0(s), 1.0, 1e-12);
    EXPECT_NEAR(PureFidelity(s, QubitState::Zero()), 1.0, 1e-12);
  }
}

TEST(FidelityTest, SymmetricBoundedAndPhaseInvariant) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 200; ++i) {
    const QubitState a = RandomState(gen), b = RandomState(gen);
    const double f = PureFidelity(a, b);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    EXPECT_NEAR(f, PureFidelity(b, a), 1e-15);
    EXPECT_NEAR(f, PureFidelity(a.WithGlobalPhase(RandomAngle(gen)), b), 1e-12);
    EXPECT_NEAR(PureFidelity(a, a), 1.0, 1e-12);
  }
}

TEST(FidelityTest, MixedMatchesPureOnPureStates) {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 200; ++i) {
    const QubitState a = RandomState(gen), b = RandomState(gen);
    EXPECT_NEAR(MixedFidelity(DensityMatrix::FromState(a), DensityMatrix::FromState(b)),
                PureFidelity(a, b), kFidelityCrossTolerance);
  }
}

TEST(FidelityTest, MaximallyMixed) {
  // F(I/2, |psi><psi|) = 1/2; F(I/2, I/2) = 1.
  std::mt19937_64 gen(2);
  const DensityMatrix mm = DensityMatrix::MaximallyMixed();
  EXPECT_NEAR(MixedFidelity(mm, DensityMatrix::FromState(RandomState(gen))), 0.5, 1e-12);
  EXPECT_NEAR(MixedFidelity(mm, mm), 1.0, 1e-12);
}

TEST(DensityMatrixTest, Validation) {
  EXPECT_THROW(DensityMatrix({0.6, 0.0, 0.0, 0.6}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({1.5, 0.0, 0.0, -0.5}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({0.5, C(0, 0.1), C(0, 0.1), 0.5}), std::invalid_argument);
  const DensityMatrix p = DensityMatrix::FromState(QubitState::Zero());
  EXPECT_NEAR(p.Eigenvalues()[0], 0.0, 1e-15);
  EXPECT_NEAR(p.Eigenvalues()[1], 1.0, 1e-15);
  EXPECT_NEAR(p.Determinant(), 0.0, 1e-15);
}

TEST(BlochTest, KnownAndUnitLength) {
  const BlochVector z = ToBloch(QubitState::Zero());
  EXPECT_DOUBLE_EQ(z.z, 1.0);
  const BlochVector plus = ToBloch(Apply(Hadamard(), QubitState::Zero()));
  EXPECT_NEAR(plus.x, 1.0, 1e-15);
  const BlochVector yplus = ToBloch(QubitState(1 / std::sqrt(2.0), C(0, 1 / std::sqrt(2.0))));
  EXPECT_NEAR(yplus.y, 1.0, 1e-15);
  std::mt19937_64 gen(9);
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(ToBloch(RandomState(gen)).Norm(), 1.0, 1e-10);
}

TEST(BlochTest, ProbabilitiesFromZComponent) {
  std::mt19937_64 gen(4);
  for (int i = 0; i < 100; ++i) {
    const QubitState s = RandomState(gen);
    EXPECT_NEAR(Prob0(s), 0.5 * (1 + ToBloch(s).z), 1e-12);
    EXPECT_NEAR(Prob0(s) + Prob1(s), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace sqnn
