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

// Braid-group representations on two qubits, their Yang-Baxterizations, and
// residual checkers for the braid relation and both spectral forms of the
// Yang-Baxter equation.

#pragma once

#include "ybc/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ybc {

/// Angles of the Yang-Baxterized gate sin(theta) I + i cos(theta) S(phi).
template <typename Real = double>
struct GateParams {
  Real theta{0};
  Real phi{0};
};

/// Spectral parameters: additive (mu, nu), multiplicative (x, y), and the
/// deformation q, which must lie on the unit circle.
template <typename Real = double>
struct SpectralParams {
  Real mu{0};
  Real nu{0};
  Real x{1};
  Real y{1};
  Complex<Real> q{1, 0};

  void validate(double tol = 1e-12) const {
    if (!std::isfinite(mu) || !std::isfinite(nu) || !std::isfinite(x) || !std::isfinite(y)) {
      throw DomainError("SpectralParams: non-finite spectral parameter");
    }
    if (std::abs(std::abs(q) - Real(1)) > tol) {
      std::ostringstream os;
      os << "SpectralParams: |q| = " << std::abs(q) << " is not on the unit circle";
      throw DomainError(os.str());
    }
  }
};

/// Selects b+ or b- in the eight-vertex family.
enum class BraidSign : int { Plus = 1, Minus = -1 };

inline int sign_value(BraidSign s) { return static_cast<int>(s); }

/// Residual of an algebraic identity and whether it met the tolerance.
template <typename Real = double>
struct CheckResult {
  Real residual{0};
  bool pass{true};
};

template <typename Real>
CheckResult<Real> make_check(Real residual, double tol) {
  return {residual, residual <= tol};
}

namespace detail {

template <typename Derived>
void require_two_qubit(const Eigen::MatrixBase<Derived>& b, const char* who) {
  if (b.rows() != 4 || b.cols() != 4) {
    throw DimensionError(std::string(who) + ": expected 4x4 operator, got " +
                         shape_str(b.rows(), b.cols()));
  }
}

/// Embeds a two-site operator acting on strands (site, site + 1) of `strands`.
template <typename Real>
CMatrix<Real> embed(const CMatrix<Real>& b, int site, int strands) {
  const CMatrix<Real> left = identity<Real>(Eigen::Index{1} << site);
  const CMatrix<Real> right = identity<Real>(Eigen::Index{1} << (strands - site - 2));
  return kron(kron(left, b), right);
}

}  // namespace detail

/// The involutive two-qubit braid solution S(phi). Unitary, Hermitian, and
/// S^2 = I for every real phi.
template <typename Real = double>
CMatrix<Real> build_s(Real phi) {
  using C = Complex<Real>;
  const C i{0, 1};
  const C ep = std::polar(Real(1), phi);
  const C em = std::polar(Real(1), -phi);
  const Real r = Real(1) / std::sqrt(Real(2));
  CMatrix<Real> s(4, 4);
  // clang-format off
  s << C(0),      ep,  i * ep,  C(0),
       em,      C(0),   C(0),    ep,
       -i * em, C(0),   C(0),    i * ep,
       C(0),      em, -i * em,  C(0);
  // clang-format on
  return r * s;
}

/// Compares (b x I)(I x b)(b x I) with (I x b)(b x I)(I x b) on three qubits.
template <typename Derived>
auto check_braid_relation(const Eigen::MatrixBase<Derived>& b, double tol = kDefaultTolerance) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_two_qubit(b, "check_braid_relation");
  const CMatrix<Real> g = b;
  const CMatrix<Real> b1 = detail::embed(g, 0, 3);
  const CMatrix<Real> b2 = detail::embed(g, 1, 3);
  const CMatrix<Real> lhs = b1 * b2 * b1;
  const CMatrix<Real> rhs = b2 * b1 * b2;
  return make_check<Real>(max_abs_diff(lhs, rhs), tol);
}

/// Far commutation b_i b_j = b_j b_i for |i - j| >= 2, checked on four strands
/// (sites 0 and 2).
template <typename Derived>
auto check_far_commutation(const Eigen::MatrixBase<Derived>& b, double tol = kDefaultTolerance) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::require_two_qubit(b, "check_far_commutation");
  const CMatrix<Real> g = b;
  const CMatrix<Real> b1 = detail::embed(g, 0, 4);
  const CMatrix<Real> b3 = detail::embed(g, 2, 4);
  const CMatrix<Real> lhs = b1 * b3;
  const CMatrix<Real> rhs = b3 * b1;
  return make_check<Real>(max_abs_diff(lhs, rhs), tol);
}

/// Rational Yang-Baxterization (I + i mu S(phi)) / sqrt(1 + mu^2).
template <typename Real = double>
CMatrix<Real> yang_baxterize_rational(Real phi, Real mu) {
  const Complex<Real> i{0, 1};
  return (identity<Real>(4) + i * mu * build_s(phi)) / std::sqrt(Real(1) + mu * mu);
}

/// sin(theta) I + i cos(theta) S(phi).
template <typename Real = double>
CMatrix<Real> build_r_theta_phi(const GateParams<Real>& p) {
  const Complex<Real> i{0, 1};
  return std::sin(p.theta) * identity<Real>(4) + i * std::cos(p.theta) * build_s(p.phi);
}

/// Additive-parameter YBE R1(mu) R2(mu+nu) R1(nu) = R2(nu) R1(mu+nu) R2(mu)
/// for the rational family built on S(phi).
template <typename Real = double>
CheckResult<Real> check_ybe_additive(Real phi, Real mu, Real nu, double tol = kDefaultTolerance) {
  auto r = [phi](Real s) { return yang_baxterize_rational(phi, s); };
  const auto one = [](const CMatrix<Real>& m) { return detail::embed(m, 0, 3); };
  const auto two = [](const CMatrix<Real>& m) { return detail::embed(m, 1, 3); };
  const CMatrix<Real> lhs = one(r(mu)) * two(r(mu + nu)) * one(r(nu));
  const CMatrix<Real> rhs = two(r(nu)) * one(r(mu + nu)) * two(r(mu));
  return make_check<Real>(max_abs_diff(lhs, rhs), tol);
}

/// Multiplicative-parameter YBE R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x) for any
/// gate family `family(x) -> 4x4`.
template <typename Real, typename Family>
CheckResult<Real> check_ybe_multiplicative(Family&& family, Real x, Real y,
                                           double tol = kDefaultTolerance) {
  auto r = [&](Real s) {
    const CMatrix<Real> m = family(s);
    detail::require_two_qubit(m, "check_ybe_multiplicative");
    return m;
  };
  const auto one = [](const CMatrix<Real>& m) { return detail::embed(m, 0, 3); };
  const auto two = [](const CMatrix<Real>& m) { return detail::embed(m, 1, 3); };
  const CMatrix<Real> lhs = one(r(x)) * two(r(x * y)) * one(r(y));
  const CMatrix<Real> rhs = two(r(y)) * one(r(x * y)) * two(r(x));
  return make_check<Real>(max_abs_diff(lhs, rhs), tol);
}

/// Eight-vertex braid matrix
///   [[1, 0, 0, q], [0, 1, +-1, 0], [0, -+1, 1, 0], [-1/q, 0, 0, 1]],
/// optionally scaled by 1/sqrt(2), which is unitary when |q| = 1.
template <typename Real = double>
CMatrix<Real> build_eight_vertex_b(BraidSign sign, Complex<Real> q, bool normalized) {
  if (q == Complex<Real>(0)) {
    throw DomainError("build_eight_vertex_b: deformation parameter q must be nonzero");
  }
  using C = Complex<Real>;
  const Real s = static_cast<Real>(sign_value(sign));
  CMatrix<Real> b(4, 4);
  // clang-format off
  b << C(1),          C(0), C(0), q,
       C(0),          C(1), C(s), C(0),
       C(0),          C(-s), C(1), C(0),
       -Real(1) / q,  C(0), C(0), C(1);
  // clang-format on
  if (normalized) b /= std::sqrt(Real(2));
  return b;
}

/// Entries (1 + x) on the diagonal and (1 - x) times the braid pattern off it;
/// equals b at x = 0 and 2 I at x = 1.
template <typename Real = double>
CMatrix<Real> yang_baxterize_eight_vertex(BraidSign sign, Complex<Real> q, Real x) {
  if (q == Complex<Real>(0)) {
    throw DomainError("yang_baxterize_eight_vertex: deformation parameter q must be nonzero");
  }
  using C = Complex<Real>;
  const Real s = static_cast<Real>(sign_value(sign));
  const Real d = Real(1) + x;
  const Real o = Real(1) - x;
  CMatrix<Real> r(4, 4);
  // clang-format off
  r << C(d),            C(0),       C(0),      q * o,
       C(0),            C(d),       C(s * o),  C(0),
       C(0),            C(-s * o),  C(d),      C(0),
       -o / q,          C(0),       C(0),      C(d);
  // clang-format on
  return r;
}

/// Unitary form cos(t) b(phi) + sin(t) b(phi)^-1 with cos(t) = 1/sqrt(1+x^2),
/// sin(t) = x/sqrt(1+x^2), q = e^{-i phi}. Equals the unnormalized matrix
/// divided by sqrt(2 (1 + x^2)).
template <typename Real = double>
CMatrix<Real> yang_baxterize_eight_vertex_unitary(BraidSign sign, Real phi, Real x) {
  const Complex<Real> q = std::polar(Real(1), -phi);
  const CMatrix<Real> b = build_eight_vertex_b(sign, q, true);
  const CMatrix<Real> b_inv = b.adjoint();
  const Real norm = std::sqrt(Real(1) + x * x);
  return (Real(1) / norm) * b + (x / norm) * b_inv;
}

/// H = i hbar (dR/dt) R^dagger with theta = gamma t, dR/dt by central
/// difference of width `step` around the current angle.
template <typename Real = double>
CMatrix<Real> evolution_hamiltonian(const GateParams<Real>& p, Real gamma, Real hbar,
                                    Real step = Real(1e-4)) {
  if (!(step > 0)) {
    std::ostringstream os;
    os << "evolution_hamiltonian: step must be positive, got " << step;
    throw DomainError(os.str());
  }
  const Complex<Real> i{0, 1};
  const CMatrix<Real> ahead = build_r_theta_phi(GateParams<Real>{p.theta + gamma * step, p.phi});
  const CMatrix<Real> behind = build_r_theta_phi(GateParams<Real>{p.theta - gamma * step, p.phi});
  const CMatrix<Real> d_dt = (ahead - behind) / (Real(2) * step);
  return i * hbar * d_dt * build_r_theta_phi(p).adjoint();
}

}  // namespace ybc
