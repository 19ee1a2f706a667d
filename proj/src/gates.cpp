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

#include "ybc/braid_ybe.hpp"

#include <cmath>
#include <numbers>

namespace ybc {

namespace {

using C = ComplexScalar;
constexpr double kPi = std::numbers::pi;

C expi(double angle) { return std::polar(1.0, angle); }

}  // namespace

ComplexMatrix dcnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 3) = 1;
  m(2, 1) = 1;
  m(3, 2) = 1;
  return m;
}

LocalFactors local_factors() {
  const double r = 1.0 / std::sqrt(2.0);
  const C i{0, 1};
  LocalFactors f{ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                 ComplexMatrix(2, 2)};
  f.a << C(1), expi(-kPi / 4), i, expi(-3 * kPi / 4);
  f.a *= r;
  f.b << i, expi(-kPi / 4), C(1), -expi(-3 * kPi / 4);
  f.b *= r;
  f.c << -expi(kPi / 4), expi(kPi / 4), C(1), C(1);
  f.c *= r;
  f.d << C(-1), C(0), C(0), -expi(3 * kPi / 4);
  return f;
}

EquivalenceResult compare_to_dcnot(const LocalFactors& factors, const ComplexMatrix& core,
                                   double phi, double tol) {
  const ComplexMatrix target = dcnot();
  const ComplexMatrix product = kron(factors.a, factors.b) * core * kron(factors.c, factors.d);

  EquivalenceResult out;
  out.phi = phi;
  out.residual_exact = max_abs_diff(product, target);
  // alpha maximizing Re tr(target^dagger e^{i alpha} product).
  const C overlap = (target.adjoint() * product).trace();
  out.global_phase = std::abs(overlap) > 0 ? -std::arg(overlap) : 0.0;
  out.residual_phase = max_abs_diff(expi(out.global_phase) * product, target);
  out.pass_exact = out.residual_exact <= tol;
  out.pass_phase = out.residual_phase <= tol;
  return out;
}

EquivalenceResult verify_dcnot_equivalence(double phi, double tol) {
  return compare_to_dcnot(local_factors(), build_s(phi), phi, tol);
}

EquivalenceResult scan_dcnot_equivalence(double tol, int grid_points) {
  if (grid_points < 3) {
    throw DomainError("scan_dcnot_equivalence: need at least 3 grid points");
  }
  const LocalFactors factors = local_factors();
  auto eval = [&](double phi) { return compare_to_dcnot(factors, build_s(phi), phi, tol); };
  auto score = [](const EquivalenceResult& r) { return std::min(r.residual_exact, r.residual_phase); };

  const double step = 2 * kPi / grid_points;
  EquivalenceResult best = eval(0.0);
  for (int k = 1; k < grid_points; ++k) {
    const auto r = eval(k * step);
    if (score(r) < score(best)) best = r;
  }

  // Golden-section search inside the bracketing cell pair.
  const double g = (std::sqrt(5.0) - 1) / 2;
  double lo = best.phi - step;
  double hi = best.phi + step;
  double m1 = hi - g * (hi - lo);
  double m2 = lo + g * (hi - lo);
  double f1 = score(eval(m1));
  double f2 = score(eval(m2));
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - g * (hi - lo);
      f1 = score(eval(m1));
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + g * (hi - lo);
      f2 = score(eval(m2));
    }
  }
  double refined_phi = std::fmod(0.5 * (lo + hi), 2 * kPi);
  if (refined_phi < 0) refined_phi += 2 * kPi;
  const auto refined = eval(refined_phi);
  return score(refined) < score(best) ? refined : best;
}

}  // namespace ybc
