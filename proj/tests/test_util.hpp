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

#pragma once

#include "ybc/linalg.hpp"

#include <random>

namespace ybc::testing {

inline std::mt19937_64& shared_rng() {
  static std::mt19937_64 rng(20260415);
  return rng;
}

inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols,
                                   std::mt19937_64& rng = shared_rng()) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = ComplexScalar(g(rng), g(rng));
  }
  return m;
}

/// Ginibre-distributed density matrix G G^dagger / tr.
inline DensityMatrix<double> random_density(Eigen::Index dim, std::mt19937_64& rng = shared_rng()) {
  const ComplexMatrix g = random_matrix(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix<double>(rho);
}

inline ComplexMatrix random_unitary(Eigen::Index dim, std::mt19937_64& rng = shared_rng()) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(dim, dim, rng));
  return qr.householderQ();
}

}  // namespace ybc::testing
