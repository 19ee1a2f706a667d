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

// Coherence quantifiers in the fixed computational basis. Entropies are in bits.

#pragma once

#include "ybc/linalg.hpp"

#include <cmath>
#include <sstream>

namespace ybc {

template <typename Real = double>
struct CoherenceValue {
  Real value{0};
  Eigen::Index basis_dim{1};

  operator Real() const { return value; }
};

/// Eigenvalues in [-clamp, 0) are treated as exact zeros.
inline constexpr double kEigenClamp = 1e-10;

template <typename Real>
DensityMatrix<Real> dephase(const DensityMatrix<Real>& rho) {
  CMatrix<Real> diag = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix<Real>(std::move(diag), rho.subsystem_dims());
}

template <typename Real>
Real von_neumann_entropy(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
  if (std::abs(rho.trace() - Real(1)) > tol) {
    std::ostringstream os;
    os << "von_neumann_entropy: trace " << rho.trace() << " differs from 1";
    throw DomainError(os.str());
  }
  const auto ev = eig_hermitian(rho.matrix(), std::max(tol, 1e-8));
  Real s = 0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    const Real lambda = ev(k) < Real(kEigenClamp) ? Real(0) : ev(k);
    if (lambda > 0) s -= lambda * std::log2(lambda);
  }
  return s;
}

/// Sum of |rho_ij| over i != j.
template <typename Real>
CoherenceValue<Real> l1_coherence(const DensityMatrix<Real>& rho) {
  const auto& m = rho.matrix();
  Real total = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) total += std::abs(m(i, j));
    }
  }
  return {total, m.rows()};
}

/// S(dephase(rho)) - S(rho), clipped at zero against roundoff.
template <typename Real>
CoherenceValue<Real> relative_entropy_coherence(const DensityMatrix<Real>& rho,
                                                double tol = kDefaultTolerance) {
  const Real gap = von_neumann_entropy(dephase(rho), tol) - von_neumann_entropy(rho, tol);
  return {gap < 0 ? Real(0) : gap, rho.dim()};
}

template <typename Real>
bool is_incoherent(const DensityMatrix<Real>& rho, double tol = kDefaultTolerance) {
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace ybc
