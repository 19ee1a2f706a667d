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

namespace ybc {

/// Double-CNOT permutation: |00> -> |00>, |01> -> |10>, |10> -> |11>, |11> -> |01>.
ComplexMatrix dcnot();

/// Single-qubit factors with DCNOT = (A x B) S (C x D).
struct LocalFactors {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix d;
};

LocalFactors local_factors();

/// Outcome of comparing (A x B) S(phi) (C x D) with DCNOT.
struct EquivalenceResult {
  double phi{0};
  /// max |product - DCNOT|.
  double residual_exact{0};
  /// max |e^{i alpha} product - DCNOT| with alpha from trace alignment.
  double residual_phase{0};
  double global_phase{0};
  bool pass_exact{false};
  bool pass_phase{false};

  bool pass() const { return pass_exact || pass_phase; }
};

EquivalenceResult verify_dcnot_equivalence(double phi, double tol = kDefaultTolerance);

/// Same comparison with caller-supplied factors and two-qubit core.
EquivalenceResult compare_to_dcnot(const LocalFactors& factors, const ComplexMatrix& core,
                                   double phi, double tol = kDefaultTolerance);

/// Scans phi over `grid_points` samples of [0, 2 pi), refines the best sample
/// by bracketing search on the up-to-phase residual, and reports the minimum.
/// `pass()` is false when no phi reaches tol; the minimum is reported anyway.
EquivalenceResult scan_dcnot_equivalence(double tol = kDefaultTolerance, int grid_points = 4096);

}  // namespace ybc
