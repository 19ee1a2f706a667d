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

#include "ybc/braid_ybe.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "ybc/coherence.hpp"

using namespace ybc;

namespace {

constexpr double kPi = std::numbers::pi;
const ComplexScalar kI{0, 1};

std::vector<double> phi_grid(int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(2 * kPi * k / n);
  return out;
}

}  // namespace

TEST(BuildS, EntriesAtPhiZero) {
  const double r = 1 / std::sqrt(2.0);
  ComplexMatrix expected(4, 4);
  expected << 0, 1, kI, 0,
              1, 0, 0, 1,
              -kI, 0, 0, kI,
              0, 1, -kI, 0;
  EXPECT_LE(max_abs_diff(build_s(0.0), ComplexMatrix(r * expected)), 1e-16);
}

TEST(BuildS, UnitaryHermitianInvolutive) {
  for (double phi : {0.0, kPi / 7, kPi / 4, 1.3}) {
    const ComplexMatrix s = build_s(phi);
    EXPECT_LE(max_abs_diff(s * s, identity(4)), 1e-12) << phi;
    EXPECT_LE(unitarity_residual(s), 1e-12) << phi;
    EXPECT_LE(hermitian_asymmetry(s), 1e-12) << phi;
  }
}

TEST(BraidRelation, IdentityPasses) {
  const auto r = check_braid_relation(identity(4));
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(BraidRelation, SMatrixPassesOnGrid) {
  for (double phi : phi_grid(32)) {
    const auto r = check_braid_relation(build_s(phi), 1e-12);
    EXPECT_TRUE(r.pass) << "phi=" << phi << " residual=" << r.residual;
  }
}

TEST(BraidRelation, ControlledPhaseFails) {
  ComplexMatrix cp = identity(4);
  cp(3, 3) = std::polar(1.0, kPi / 3);
  const auto r = check_braid_relation(cp);
  EXPECT_FALSE(r.pass);
  // The two braid words differ only by phases on |011> and |110>; each
  // differing entry is off by |1 - e^{i pi/3}| = 1.
  EXPECT_NEAR(r.residual, 1.0, 1e-12);
}

TEST(BraidRelation, WrongShape) {
  EXPECT_THROW(check_braid_relation(identity(2)), DimensionError);
  EXPECT_THROW(check_far_commutation(identity(8)), DimensionError);
}

TEST(BraidRelation, FarCommutationOnFourStrands) {
  for (double phi : phi_grid(8)) {
    EXPECT_LE(check_far_commutation(build_s(phi)).residual, 1e-12);
  }
  // Any 4x4 matrix commutes with itself on disjoint strands.
  const ComplexMatrix u = build_r_theta_phi(GateParams<double>{0.3, 0.2}) *
                          kron(ComplexMatrix(build_s(0.1).block(0, 0, 2, 2) * std::sqrt(2.0) +
                                             identity(2)),
                               identity(2));
  EXPECT_LE(check_far_commutation(u).residual, 1e-12);
}

TEST(Rational, MuZeroIsIdentity) {
  EXPECT_EQ(max_abs_diff(yang_baxterize_rational(0.4, 0.0), identity(4)), 0.0);
}

TEST(Rational, LargeMuApproachesIS) {
  const double phi = 0.8;
  EXPECT_LE(max_abs_diff(yang_baxterize_rational(phi, 1e8), ComplexMatrix(kI * build_s(phi))),
            1e-7);
}

TEST(Rational, UnitaryAtMuOne) {
  const ComplexMatrix r = yang_baxterize_rational(0.0, 1.0);
  const ComplexMatrix expected = (identity(4) + kI * build_s(0.0)) / std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(r, expected), 1e-15);
  EXPECT_LE(unitarity_residual(r), 1e-12);
}

TEST(Rational, MatchesThetaParameterization) {
  for (double mu : {-3.0, -0.5, 0.0, 0.7, 2.0, 10.0}) {
    for (double phi : {0.0, 1.0, 2.5}) {
      // cos(theta) = mu / sqrt(1 + mu^2), sin(theta) = 1 / sqrt(1 + mu^2).
      const double theta = std::atan2(1.0, mu);
      EXPECT_LE(max_abs_diff(yang_baxterize_rational(phi, mu),
                             build_r_theta_phi(GateParams<double>{theta, phi})),
                1e-12);
    }
  }
}

TEST(RThetaPhi, SpecialAngles) {
  for (double phi : {0.0, 0.9}) {
    EXPECT_LE(max_abs_diff(build_r_theta_phi(GateParams<double>{kPi / 2, phi}), identity(4)),
              1e-15);
    EXPECT_LE(max_abs_diff(build_r_theta_phi(GateParams<double>{0.0, phi}),
                           ComplexMatrix(kI * build_s(phi))),
              1e-15);
  }
}

TEST(RThetaPhi, UnitaryAndPeriodicOnGrid) {
  for (double theta : phi_grid(32)) {
    for (double phi : phi_grid(32)) {
      const ComplexMatrix r = build_r_theta_phi(GateParams<double>{theta, phi});
      ASSERT_LE(unitarity_residual(r), 1e-12);
      ASSERT_LE(max_abs_diff(build_r_theta_phi(GateParams<double>{theta + 2 * kPi, phi}), r),
                1e-12);
    }
  }
}

TEST(RThetaPhi, EntanglesProductInput) {
  ComplexVector in = ComplexVector::Zero(4);
  in(0) = 1;
  const ComplexVector out = build_r_theta_phi(GateParams<double>{kPi / 4, 0.0}) * in;
  const auto rho = DensityMatrix<double>::from_pure(PureState<double>(out));
  const auto ev = eig_hermitian(partial_trace(rho, {0}).matrix());
  EXPECT_GT(ev(0), 1e-3);
  EXPECT_GT(ev(1), 1e-3);
  EXPECT_GT(von_neumann_entropy(partial_trace(rho, {0})), 0.1);
}

TEST(YbeAdditive, ZeroParametersExact) {
  EXPECT_EQ(check_ybe_additive(0.3, 0.0, 0.0).residual, 0.0);
}

TEST(YbeAdditive, PassesOnSpecGrid) {
  EXPECT_TRUE(check_ybe_additive(kPi / 4, 0.7, -1.3, 1e-10).pass);
  const std::vector<double> params{-2, -1, -0.5, 0.5, 1, 2};
  for (double phi : {0.0, kPi / 4, 1.1}) {
    for (double mu : params) {
      for (double nu : params) {
        const auto r = check_ybe_additive(phi, mu, nu, 1e-10);
        EXPECT_TRUE(r.pass) << phi << " " << mu << " " << nu << " residual " << r.residual;
      }
    }
  }
}

TEST(YbeAdditive, NonBraidFamilyFails) {
  // Replacing S with the controlled-Z generator breaks the additive identity.
  ComplexMatrix cz = identity(4);
  cz(3, 3) = -1.0;
  auto family = [&](double mu) -> ComplexMatrix {
    return (identity(4) + kI * mu * cz) / std::sqrt(1 + mu * mu);
  };
  auto one = [](const ComplexMatrix& m) { return kron(m, identity(2)); };
  auto two = [](const ComplexMatrix& m) { return kron(identity(2), m); };
  const double mu = 0.7, nu = 1.1;
  const ComplexMatrix lhs = one(family(mu)) * two(family(mu + nu)) * one(family(nu));
  const ComplexMatrix rhs = two(family(nu)) * one(family(mu + nu)) * two(family(mu));
  EXPECT_GT(max_abs_diff(lhs, rhs), 0.1);

  auto generic = [&](double m) -> ComplexMatrix {
    return (identity(4) + kI * m * build_r_theta_phi(GateParams<double>{0.4, 0.0})) /
           std::sqrt(1 + m * m);
  };
  EXPECT_FALSE(check_ybe_multiplicative(generic, 0.5, 2.0, 1e-10).pass);
}

TEST(EightVertex, UnnormalizedEntries) {
  ComplexMatrix expected(4, 4);
  expected << 1, 0, 0, 1,
              0, 1, 1, 0,
              0, -1, 1, 0,
              -1, 0, 0, 1;
  EXPECT_EQ(max_abs_diff(build_eight_vertex_b(BraidSign::Plus, ComplexScalar(1), false), expected),
            0.0);
}

TEST(EightVertex, NormalizedUnitaryAndRejectsZeroQ) {
  const ComplexMatrix b =
      build_eight_vertex_b(BraidSign::Minus, std::polar(1.0, -kPi / 5), true);
  EXPECT_LE(unitarity_residual(b), 1e-12);
  EXPECT_THROW(build_eight_vertex_b(BraidSign::Plus, ComplexScalar(0), false), DomainError);
  EXPECT_THROW(yang_baxterize_eight_vertex(BraidSign::Plus, ComplexScalar(0), 0.5), DomainError);
}

TEST(EightVertex, EigenvaluesOnePlusMinusI) {
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    const ComplexMatrix b = build_eight_vertex_b(sign, std::polar(1.0, -0.7), false);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(b);
    int plus = 0, minus = 0;
    for (Eigen::Index k = 0; k < 4; ++k) {
      const ComplexScalar ev = solver.eigenvalues()(k);
      if (std::abs(ev - ComplexScalar(1, 1)) < 1e-10) ++plus;
      if (std::abs(ev - ComplexScalar(1, -1)) < 1e-10) ++minus;
    }
    EXPECT_EQ(plus, 2);
    EXPECT_EQ(minus, 2);
  }
}

TEST(EightVertex, BraidRelationHolds) {
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    for (double phi : {0.0, 0.4, kPi / 3}) {
      EXPECT_TRUE(
          check_braid_relation(build_eight_vertex_b(sign, std::polar(1.0, -phi), false), 1e-12)
              .pass);
    }
  }
}

TEST(EightVertex, YangBaxterizationLimits) {
  const ComplexScalar q = std::polar(1.0, -0.3);
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    EXPECT_EQ(max_abs_diff(yang_baxterize_eight_vertex(sign, q, 1.0), ComplexMatrix(2.0 * identity(4))),
              0.0);
    EXPECT_EQ(max_abs_diff(yang_baxterize_eight_vertex(sign, q, 0.0),
                           build_eight_vertex_b(sign, q, false)),
              0.0);
  }
}

TEST(EightVertex, MatchesBPlusTwoXBInverse) {
  // R(x) = b + x * (1 - i)(1 + i) * b^-1.
  const ComplexScalar q = std::polar(1.0, -1.1);
  for (double x : {-1.5, 0.3, 2.0}) {
    const ComplexMatrix b = build_eight_vertex_b(BraidSign::Plus, q, false);
    const ComplexMatrix expected = b + 2.0 * x * ComplexMatrix(b.inverse());
    EXPECT_LE(max_abs_diff(yang_baxterize_eight_vertex(BraidSign::Plus, q, x), expected), 1e-13);
  }
}

TEST(EightVertex, UnitaryFormProperties) {
  const double phi = kPi / 3;
  const ComplexMatrix u = yang_baxterize_eight_vertex_unitary(BraidSign::Plus, phi, 0.6);
  EXPECT_LE(unitarity_residual(u), 1e-12);
  for (double x : {-4.0, -1.0, 0.0, 0.25, 1.0, 7.0}) {
    for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
      const ComplexMatrix v = yang_baxterize_eight_vertex_unitary(sign, phi, x);
      EXPECT_LE(unitarity_residual(v), 1e-12);
      const ComplexMatrix scaled = yang_baxterize_eight_vertex(sign, std::polar(1.0, -phi), x) /
                                   std::sqrt(2 * (1 + x * x));
      EXPECT_LE(max_abs_diff(v, scaled), 1e-14);
    }
  }
}

TEST(YbeMultiplicative, EightVertexFamily) {
  const ComplexScalar q = std::polar(1.0, -kPi / 4);
  auto family = [&](double x) { return yang_baxterize_eight_vertex(BraidSign::Plus, q, x); };
  EXPECT_EQ(check_ybe_multiplicative(family, 1.0, 1.0).residual, 0.0);
  EXPECT_TRUE(check_ybe_multiplicative(family, 0.5, 2.0, 1e-10).pass);
  for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (double y : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      EXPECT_TRUE(check_ybe_multiplicative(family, x, y, 1e-10).pass) << x << " " << y;
    }
  }
}

TEST(YbeMultiplicative, RejectsWrongShape) {
  auto bad = [](double) { return ComplexMatrix(identity(2)); };
  EXPECT_THROW(check_ybe_multiplicative(bad, 1.0, 1.0), DimensionError);
}

TEST(Hamiltonian, ReducesToGammaHbarS) {
  for (double theta : {0.0, 0.4, 1.0, 2.9}) {
    for (double phi : {0.0, 0.7}) {
      const GateParams<double> p{theta, phi};
      EXPECT_LE(max_abs_diff(evolution_hamiltonian(p, 1.0, 1.0, 1e-4), build_s(phi)), 1e-6);
      const ComplexMatrix h = evolution_hamiltonian(p, 2.0, 0.5, 1e-4);
      EXPECT_LE(max_abs_diff(h, build_s(phi)), 1e-6);
      EXPECT_LE(hermitian_asymmetry(h), 1e-8);
    }
  }
}

TEST(Hamiltonian, ZeroGammaAndBadStep) {
  const GateParams<double> p{0.3, 0.1};
  EXPECT_EQ(evolution_hamiltonian(p, 0.0, 1.0).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(evolution_hamiltonian(p, 1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(evolution_hamiltonian(p, 1.0, 1.0, -1e-3), DomainError);
}

TEST(Hamiltonian, SecondOrderConvergence) {
  const GateParams<double> p{0.7, 0.4};
  const ComplexMatrix ref = build_s(p.phi);
  const double e1 = max_abs_diff(evolution_hamiltonian(p, 1.0, 1.0, 1e-3), ref);
  const double e2 = max_abs_diff(evolution_hamiltonian(p, 1.0, 1.0, 5e-4), ref);
  EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(SpectralParams, Validation) {
  SpectralParams<double> ok{0.1, 0.2, 0.5, 2.0, std::polar(1.0, 0.3)};
  EXPECT_NO_THROW(ok.validate());
  SpectralParams<double> off_circle = ok;
  off_circle.q = {1.1, 0};
  EXPECT_THROW(off_circle.validate(), DomainError);
  SpectralParams<double> nan_mu = ok;
  nan_mu.mu = std::nan("");
  EXPECT_THROW(nan_mu.validate(), DomainError);
}
