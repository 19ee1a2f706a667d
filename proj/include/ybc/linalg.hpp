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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybc {

/// Raised when operand shapes are incompatible. The message carries both shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical input lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexScalar = Complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;

/// Default tolerance for algebraic identities.
inline constexpr double kDefaultTolerance = 1e-10;

namespace detail {

inline std::string shape_str(Eigen::Index rows, Eigen::Index cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

}  // namespace detail

template <typename Real = double>
CMatrix<Real> identity(Eigen::Index dim) {
  return CMatrix<Real>::Identity(dim, dim);
}

template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: shape mismatch " + detail::shape_str(a.rows(), a.cols()) +
                         " * " + detail::shape_str(b.rows(), b.cols()));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b;
  return out;
}

/// Kronecker product. Block (ia, ja) of the result is a(ia, ja) * b, so the
/// left operand owns the most significant qubits.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a.adjoint();
  return out;
}

template <typename DerivedA, typename DerivedB>
auto max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch " + detail::shape_str(a.rows(), a.cols()) +
                         " vs " + detail::shape_str(b.rows(), b.cols()));
  }
  if (a.size() == 0) {
    return typename Eigen::NumTraits<typename DerivedA::Scalar>::Real(0);
  }
  return (a - b).cwiseAbs().maxCoeff();
}

/// Largest |a - a^dagger| entry; zero for Hermitian input.
template <typename Derived>
auto hermitian_asymmetry(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("hermitian_asymmetry: non-square " + detail::shape_str(a.rows(), a.cols()));
  }
  return max_abs_diff(a, a.adjoint());
}

/// Residual of U U^dagger against the identity.
template <typename Derived>
auto unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  if (u.rows() != u.cols()) {
    throw DimensionError("unitarity_residual: non-square " + detail::shape_str(u.rows(), u.cols()));
  }
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> prod = u * u.adjoint();
  return max_abs_diff(prod, Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(
                                u.rows(), u.cols()));
}

/// Eigenvalues of a Hermitian matrix in ascending order.
template <typename Derived>
auto eig_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-8) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Real asym = hermitian_asymmetry(a);
  if (asym > tol) {
    std::ostringstream os;
    os << "eig_hermitian: input is not Hermitian (max asymmetry " << asym << ")";
    throw DomainError(os.str());
  }
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  // Symmetrize so roundoff-level asymmetry does not leak into the solver.
  Mat sym = (a + a.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  RVector<Real> values = solver.eigenvalues();
  return values;
}

/// Normalized pure state on dim = 2^k amplitudes.
template <typename Real = double>
class PureState {
 public:
  explicit PureState(CVector<Real> amplitudes, double tol = 1e-12)
      : amplitudes_(std::move(amplitudes)) {
    const auto dim = amplitudes_.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
      throw DimensionError("PureState: dimension " + std::to_string(dim) + " is not a power of 2");
    }
    const Real norm = amplitudes_.squaredNorm();
    if (std::abs(norm - Real(1)) > tol) {
      std::ostringstream os;
      os << "PureState: squared norm " << norm << " differs from 1";
      throw DomainError(os.str());
    }
  }

  Eigen::Index dim() const { return amplitudes_.size(); }
  int num_qubits() const {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim()) ++n;
    return n;
  }
  const CVector<Real>& amplitudes() const { return amplitudes_; }

  CMatrix<Real> projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  CVector<Real> amplitudes_;
};

/// Square matrix together with its subsystem dimensions. Construction checks
/// shape only; `validate` checks the physical invariants.
template <typename Real = double>
class DensityMatrix {
 public:
  DensityMatrix(CMatrix<Real> mat, std::vector<int> subsystem_dims)
      : mat_(std::move(mat)), dims_(std::move(subsystem_dims)) {
    if (mat_.rows() != mat_.cols()) {
      throw DimensionError("DensityMatrix: non-square " + detail::shape_str(mat_.rows(), mat_.cols()));
    }
    if (dims_.empty()) {
      throw DimensionError("DensityMatrix: empty subsystem list");
    }
    long long prod = 1;
    for (int d : dims_) {
      if (d <= 0) throw DimensionError("DensityMatrix: nonpositive subsystem dimension");
      prod *= d;
    }
    if (prod != mat_.rows()) {
      throw DimensionError("DensityMatrix: subsystem dimensions multiply to " +
                           std::to_string(prod) + " but matrix is " +
                           detail::shape_str(mat_.rows(), mat_.cols()));
    }
  }

  /// Qubit register of the matrix's dimension.
  explicit DensityMatrix(CMatrix<Real> mat) : DensityMatrix(mat, qubit_dims_for(mat.rows())) {}

  static DensityMatrix from_pure(const PureState<Real>& psi) {
    return DensityMatrix(psi.projector(), std::vector<int>(psi.num_qubits(), 2));
  }

  const CMatrix<Real>& matrix() const { return mat_; }
  const std::vector<int>& subsystem_dims() const { return dims_; }
  Eigen::Index dim() const { return mat_.rows(); }
  Complex<Real> operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

  Real trace() const { return mat_.trace().real(); }
  Real purity() const { return (mat_ * mat_).trace().real(); }

  /// Empty string when Hermitian, unit trace, and PSD within tol; otherwise a
  /// description of the first violated invariant.
  std::string invariant_violation(double tol = kDefaultTolerance) const {
    std::ostringstream os;
    const Real asym = hermitian_asymmetry(mat_);
    if (asym > tol) {
      os << "not Hermitian (asymmetry " << asym << ")";
      return os.str();
    }
    if (std::abs(trace() - Real(1)) > tol) {
      os << "trace " << trace() << " differs from 1";
      return os.str();
    }
    const auto ev = eig_hermitian(mat_, tol);
    if (ev(0) < -tol) {
      os << "negative eigenvalue " << ev(0);
      return os.str();
    }
    return {};
  }

  bool is_valid(double tol = kDefaultTolerance) const { return invariant_violation(tol).empty(); }

  const DensityMatrix& validate(double tol = kDefaultTolerance) const {
    if (auto msg = invariant_violation(tol); !msg.empty()) {
      throw DomainError("DensityMatrix: " + msg);
    }
    return *this;
  }

 private:
  static std::vector<int> qubit_dims_for(Eigen::Index dim) {
    std::vector<int> dims;
    Eigen::Index d = 1;
    while (d < dim) {
      d *= 2;
      dims.push_back(2);
    }
    if (d != dim || dims.empty()) {
      throw DimensionError("DensityMatrix: dimension " + std::to_string(dim) +
                           " is not a power of 2 >= 2");
    }
    return dims;
  }

  CMatrix<Real> mat_;
  std::vector<int> dims_;
};

/// Trace out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original order.
template <typename Real>
DensityMatrix<Real> partial_trace(const DensityMatrix<Real>& rho, const std::vector<int>& keep) {
  const auto& dims = rho.subsystem_dims();
  const int n = static_cast<int>(dims.size());
  if (keep.empty() || static_cast<int>(keep.size()) >= n) {
    throw DimensionError("partial_trace: keep must be a nonempty strict subset of " +
                         std::to_string(n) + " subsystems");
  }
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw DimensionError("partial_trace: subsystem index " + std::to_string(k) +
                           " out of range [0, " + std::to_string(n) + ")");
    }
    if (kept[k]) {
      throw DimensionError("partial_trace: duplicate subsystem index " + std::to_string(k));
    }
    kept[k] = true;
  }
  std::vector<int> sorted_keep = keep;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  std::vector<int> traced;
  for (int k = 0; k < n; ++k) {
    if (!kept[k]) traced.push_back(k);
  }

  // Stride of subsystem k in the big-endian flat index.
  std::vector<Eigen::Index> stride(n);
  Eigen::Index s = 1;
  for (int k = n - 1; k >= 0; --k) {
    stride[k] = s;
    s *= dims[k];
  }

  auto offsets = [&](const std::vector<int>& subsystems) {
    std::vector<Eigen::Index> out{0};
    for (int k : subsystems) {
      std::vector<Eigen::Index> next;
      next.reserve(out.size() * dims[k]);
      for (Eigen::Index base : out) {
        for (int v = 0; v < dims[k]; ++v) next.push_back(base + v * stride[k]);
      }
      out = std::move(next);
    }
    return out;
  };
  const auto keep_off = offsets(sorted_keep);
  const auto trace_off = offsets(traced);

  const Eigen::Index dk = static_cast<Eigen::Index>(keep_off.size());
  CMatrix<Real> out = CMatrix<Real>::Zero(dk, dk);
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex<Real> acc{0, 0};
      for (Eigen::Index t : trace_off) acc += m(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = acc;
    }
  }
  std::vector<int> kept_dims;
  for (int k : sorted_keep) kept_dims.push_back(dims[k]);
  return DensityMatrix<Real>(std::move(out), std::move(kept_dims));
}

}  // namespace ybc
