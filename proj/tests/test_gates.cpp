// Copyright 2026 The ybc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ybc/gates.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "ybc/braid_ybe.hpp"

using namespace ybc;

namespace {

ComplexVector basis(Eigen::Index k) {
  ComplexVector v = ComplexVector::Zero(4);
  v(k) = 1;
  return v;
}

}  // namespace

TEST(Dcnot, BasisStates) {
  const ComplexMatrix d = dcnot();
  // |ab> -> |a xor b, a>.
  EXPECT_EQ((d * basis(0b00) - basis(0b00)).norm(), 0.0);
  EXPECT_EQ((d * basis(0b01) - basis(0b10)).norm(), 0.0);
  EXPECT_EQ((d * basis(0b10) - basis(0b11)).norm(), 0.0);
  EXPECT_EQ((d * basis(0b11) - basis(0b01)).norm(), 0.0);
}

TEST(Dcnot, IsCNOTProduct) {
  ComplexMatrix cnot12 = ComplexMatrix::Zero(4, 4);
  cnot12(0, 0) = cnot12(1, 1) = cnot12(2, 3) = cnot12(3, 2) = 1;
  ComplexMatrix cnot21 = ComplexMatrix::Zero(4, 4);
  cnot21(0, 0) = cnot21(2, 2) = cnot21(1, 3) = cnot21(3, 1) = 1;
  EXPECT_EQ(max_abs_diff(dcnot(), ComplexMatrix(cnot12 * cnot21)), 0.0);
}

TEST(Dcnot, OrderThreePermutation) {
  const ComplexMatrix d = dcnot();
  EXPECT_EQ(max_abs_diff(ComplexMatrix(d * d * d), identity(4)), 0.0);
  EXPECT_GT(max_abs_diff(ComplexMatrix(d * d), identity(4)), 0.5);
  for (Eigen::Index r = 0; r < 4; ++r) EXPECT_EQ(d.row(r).cwiseAbs().sum(), 1.0);
  EXPECT_LE(unitarity_residual(d), 0.0);
}

TEST(LocalFactors, AreUnitary) {
  const auto f = local_factors();
  for (const ComplexMatrix* m : {&f.a, &f.b, &f.c, &f.d}) {
    EXPECT_EQ(m->rows(), 2);
    EXPECT_LE(unitarity_residual(*m), 1e-15);
  }
}

TEST(Equivalence, HoldsExactlyAtPhiZero) {
  const auto r = verify_dcnot_equivalence(0.0);
  EXPECT_TRUE(r.pass_exact) << r.residual_exact;
  EXPECT_LE(r.residual_exact, 1e-10);
  EXPECT_NEAR(r.global_phase, 0.0, 1e-12);
}

TEST(Equivalence, HoldsUpToSignAtPhiPi) {
  const auto r = verify_dcnot_equivalence(std::numbers::pi);
  EXPECT_FALSE(r.pass_exact);
  EXPECT_TRUE(r.pass_phase) << r.residual_phase;
  EXPECT_NEAR(std::abs(r.global_phase), std::numbers::pi, 1e-9);
}

TEST(Equivalence, FailsAtGenericPhi) {
  EXPECT_FALSE(verify_dcnot_equivalence(std::numbers::pi / 4).pass());
}

TEST(Equivalence, ScanFindsWitness) {
  const auto r = scan_dcnot_equivalence();
  EXPECT_TRUE(r.pass());
  EXPECT_LE(std::min(r.residual_exact, r.residual_phase), 1e-10);
  EXPECT_THROW(scan_dcnot_equivalence(1e-10, 2), DomainError);
}

TEST(Equivalence, DetectsPerturbedFactor) {
  auto f = local_factors();
  ComplexMatrix tweak = identity(2);
  tweak(1, 1) = std::polar(1.0, 0.1);
  f.a = f.a * tweak;
  const auto r = compare_to_dcnot(f, build_s(0.0), 0.0);
  EXPECT_FALSE(r.pass());
  EXPECT_GT(std::min(r.residual_exact, r.residual_phase), 0.02);
}

TEST(Equivalence, DetectsWrongCore) {
  const auto r = compare_to_dcnot(local_factors(), identity(4), 0.0);
  EXPECT_FALSE(r.pass());
}
