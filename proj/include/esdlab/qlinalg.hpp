// Copyright 2026 The esdlab Authors
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

// Dense complex kernel for small qubit registers (up to 8 qubits).
//
// Bit convention: qubit 0 is the leftmost ket symbol and the most significant
// bit of the basis index, so |b0 b1 ... b(n-1)> has index b0 b1 ... b(n-1) in
// binary. All routines here share that convention.

#ifndef ESDLAB_QLINALG_HPP
#define ESDLAB_QLINALG_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "esdlab/errors.hpp"

namespace esdlab {

template <typename Real>
using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using Vector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using MatrixXc = Matrix<double>;
using VectorXc = Vector<double>;
using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;
using Vector4c = Eigen::Matrix<std::complex<double>, 4, 1>;

/// Largest supported extent of a single axis.
inline constexpr Eigen::Index kMaxAxis = Eigen::Index{1} << 16;

/// Number of qubits n for a dimension 2^n. Throws ArgumentError otherwise.
inline int qubit_count(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw ArgumentError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.array().isFinite().all();
}

/// Unit-norm amplitude vector over a register of qubits.
template <typename Real>
class PureState {
 public:
  static constexpr Real kNormTolerance = Real(1e-12);

  explicit PureState(Vector<Real> amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_ = qubit_count(amplitudes_.size());
    if (!all_finite(amplitudes_)) throw ArgumentError("state has non-finite amplitudes");
    if (std::abs(amplitudes_.squaredNorm() - Real(1)) > kNormTolerance) {
      throw ArgumentError("state is not normalized");
    }
  }

  /// Normalizes first; rejects the zero vector.
  static PureState normalized(Vector<Real> amplitudes) {
    const Real norm = amplitudes.norm();
    if (!(norm > Real(0))) throw ArgumentError("cannot normalize a zero vector");
    amplitudes /= norm;
    return PureState(std::move(amplitudes));
  }

  static PureState basis(int qubits, Eigen::Index index) {
    Vector<Real> v = Vector<Real>::Zero(Eigen::Index{1} << qubits);
    v(index) = Real(1);
    return PureState(std::move(v));
  }

  const Vector<Real>& amplitudes() const { return amplitudes_; }
  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  Matrix<Real> density() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Vector<Real> amplitudes_;
  int qubits_ = 0;
};

using State = PureState<double>;

/// Kronecker product; the left factor indexes the most significant bits.
template <typename DA, typename DB>
typename DA::PlainObject tensor(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() * b.rows() > kMaxAxis || a.cols() * b.cols() > kMaxAxis) {
    throw SizeError("tensor product exceeds 2^16 entries per axis");
  }
  typename DA::PlainObject out = Eigen::kroneckerProduct(a.eval(), b.eval());
  return out;
}

namespace detail {

template <typename Scalar>
struct Entry {
  Eigen::Index row;
  Eigen::Index col;
  Scalar value;
};

template <typename Derived>
auto nonzeros(const Eigen::MatrixBase<Derived>& op) {
  std::vector<Entry<typename Derived::Scalar>> out;
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if (op(r, c) != typename Derived::Scalar(0)) out.push_back({r, c, op(r, c)});
    }
  }
  return out;
}

// m * E^dagger, with E = I_hi (x) op (x) I_lo acting on the column index.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> right_mul_adjoint(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
    std::span<const Entry<Scalar>> entries, Eigen::Index sub, Eigen::Index lo_dim) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat out = Mat::Zero(m.rows(), m.cols());
  const Eigen::Index hi_dim = m.cols() / (sub * lo_dim);
  for (Eigen::Index hi = 0; hi < hi_dim; ++hi) {
    for (const auto& e : entries) {
      const Eigen::Index dst = (hi * sub + e.row) * lo_dim;
      const Eigen::Index src = (hi * sub + e.col) * lo_dim;
      const Scalar w = std::conj(e.value);
      for (Eigen::Index lo = 0; lo < lo_dim; ++lo) out.col(dst + lo) += w * m.col(src + lo);
    }
  }
  return out;
}

}  // namespace detail

/// E rho E^dagger where E embeds `op` on the contiguous qubits
/// [first, first + log2(op.rows())) of rho's register. Zero entries of op
/// are skipped, so sparse operators are cheap.
template <typename DOp, typename DRho>
typename DRho::PlainObject conjugate_subsystem(const Eigen::MatrixBase<DOp>& op, int first,
                                               const Eigen::MatrixBase<DRho>& rho) {
  using Plain = typename DRho::PlainObject;
  using Scalar = typename DRho::Scalar;
  if (op.rows() != op.cols()) throw ArgumentError("subsystem operator must be square");
  if (rho.rows() != rho.cols()) throw ArgumentError("state matrix must be square");
  const int n = qubit_count(rho.rows());
  const int m = qubit_count(op.rows());
  if (first < 0 || first + m > n) {
    throw IndexError("subsystem [" + std::to_string(first) + ", " + std::to_string(first + m) +
                     ") outside a " + std::to_string(n) + "-qubit register");
  }
  const auto entries = detail::nonzeros(op.template cast<Scalar>());
  const std::span<const detail::Entry<Scalar>> view(entries);
  const Eigen::Index sub = op.rows();
  const Eigen::Index lo_dim = Eigen::Index{1} << (n - first - m);
  Plain a = detail::right_mul_adjoint<Scalar>(rho.eval(), view, sub, lo_dim);
  Plain b = detail::right_mul_adjoint<Scalar>(a.adjoint(), view, sub, lo_dim);
  return b.adjoint();
}

/// (I (x) ... (x) op (x) ... (x) I) rho (...)^dagger for a single-qubit op.
template <typename DOp, typename DRho>
typename DRho::PlainObject apply_local(const Eigen::MatrixBase<DOp>& op, int target,
                                       const Eigen::MatrixBase<DRho>& rho) {
  if (op.rows() != 2 || op.cols() != 2) throw ArgumentError("local operator must be 2x2");
  return conjugate_subsystem(op, target, rho);
}

/// One entry S[(row, col), (in_row, in_col)] of a channel's superoperator
/// on a d-dimensional subsystem: out(row, col) += coef * in(in_row, in_col).
template <typename Scalar>
struct SuperTerm {
  Eigen::Index row;
  Eigen::Index col;
  Eigen::Index in_row;
  Eigen::Index in_col;
  Scalar coef;
};

/// Sparse superoperator sum_K K (.) K^dagger with duplicate entries merged.
template <typename Plain>
std::vector<SuperTerm<typename Plain::Scalar>> superoperator_terms(std::span<const Plain> kraus) {
  using Scalar = typename Plain::Scalar;
  std::vector<SuperTerm<Scalar>> terms;
  for (const auto& k : kraus) {
    const auto entries = detail::nonzeros(k);
    for (const auto& a : entries) {
      for (const auto& b : entries) {
        terms.push_back({a.row, b.row, a.col, b.col, a.value * std::conj(b.value)});
      }
    }
  }
  auto key = [](const SuperTerm<Scalar>& t) { return std::tie(t.row, t.col, t.in_row, t.in_col); };
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  std::vector<SuperTerm<Scalar>> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && key(merged.back()) == key(t)) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.coef == Scalar(0); });
  return merged;
}

/// Applies a superoperator given by `terms` on the `sub`-dimensional
/// subsystem starting at qubit `first`.
template <typename Scalar, typename DRho>
typename DRho::PlainObject apply_superoperator_subsystem(std::span<const SuperTerm<Scalar>> terms,
                                                         Eigen::Index sub, int first,
                                                         const Eigen::MatrixBase<DRho>& rho) {
  using Plain = typename DRho::PlainObject;
  if (rho.rows() != rho.cols()) throw ArgumentError("state matrix must be square");
  const int n = qubit_count(rho.rows());
  const int m = qubit_count(sub);
  if (first < 0 || first + m > n) {
    throw IndexError("subsystem [" + std::to_string(first) + ", " + std::to_string(first + m) +
                     ") outside a " + std::to_string(n) + "-qubit register");
  }
  const Eigen::Index dim = rho.rows();
  const Eigen::Index lo_dim = Eigen::Index{1} << (n - first - m);
  const Eigen::Index hi_dim = dim / (sub * lo_dim);
  const Eigen::Index stride = sub * lo_dim;

  const auto& in = rho.eval();
  Plain out = Plain::Zero(dim, dim);
  // Column-major: walk whole columns, rows in contiguous runs of lo_dim.
  for (const auto& t : terms) {
    // Spelled out in reals: std::complex operator* has a NaN-recovery path
    // that blocks vectorization.
    const auto cr = t.coef.real();
    const auto ci = t.coef.imag();
    for (Eigen::Index hc = 0; hc < hi_dim; ++hc) {
      for (Eigen::Index lc = 0; lc < lo_dim; ++lc) {
        const Eigen::Index c_out = hc * stride + t.col * lo_dim + lc;
        const Eigen::Index c_in = hc * stride + t.in_col * lo_dim + lc;
        Scalar* dst = out.data() + c_out * dim + t.row * lo_dim;
        const Scalar* src = in.data() + c_in * dim + t.in_row * lo_dim;
        for (Eigen::Index hr = 0; hr < hi_dim; ++hr) {
          Scalar* d = dst + hr * stride;
          const Scalar* s = src + hr * stride;
          for (Eigen::Index lr = 0; lr < lo_dim; ++lr) {
            d[lr] += Scalar(cr * s[lr].real() - ci * s[lr].imag(), cr * s[lr].imag() + ci * s[lr].real());
          }
        }
      }
    }
  }
  return out;
}

/// Sum over K of K rho K^dagger with every K embedded on [first, first + m).
template <typename Plain, typename DRho>
typename DRho::PlainObject apply_kraus_subsystem(std::span<const Plain> kraus, int first,
                                                 const Eigen::MatrixBase<DRho>& rho) {
  if (kraus.empty()) throw ArgumentError("empty Kraus set");
  const auto terms = superoperator_terms(kraus);
  return apply_superoperator_subsystem(
      std::span<const SuperTerm<typename Plain::Scalar>>(terms), kraus.front().rows(), first, rho);
}

/// Reduced matrix over the qubits in `keep` (any order; the result orders
/// them by ascending qubit index).
template <typename Derived>
typename Derived::PlainObject partial_trace(const Eigen::MatrixBase<Derived>& state,
                                            std::vector<int> keep) {
  using Plain = typename Derived::PlainObject;
  if (state.rows() != state.cols()) throw ArgumentError("state matrix must be square");
  const int n = qubit_count(state.rows());
  if (keep.empty()) throw ArgumentError("keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw ArgumentError("keep set has duplicate qubits");
  }
  if (keep.front() < 0 || keep.back() >= n) throw ArgumentError("keep set outside register");

  std::vector<int> traced;
  for (int q = 0, j = 0; q < n; ++q) {
    if (j < static_cast<int>(keep.size()) && keep[j] == q) {
      ++j;
    } else {
      traced.push_back(q);
    }
  }
  // Scatter a sub-index over the bit positions of the listed qubits.
  auto scatter = [n](const std::vector<int>& qubits, Eigen::Index value) {
    Eigen::Index out = 0;
    const int k = static_cast<int>(qubits.size());
    for (int i = 0; i < k; ++i) {
      if ((value >> (k - 1 - i)) & 1) out |= Eigen::Index{1} << (n - 1 - qubits[i]);
    }
    return out;
  };
  const Eigen::Index kept_dim = Eigen::Index{1} << keep.size();
  const Eigen::Index traced_dim = Eigen::Index{1} << traced.size();
  std::vector<Eigen::Index> kept_idx(kept_dim), traced_idx(traced_dim);
  for (Eigen::Index i = 0; i < kept_dim; ++i) kept_idx[i] = scatter(keep, i);
  for (Eigen::Index t = 0; t < traced_dim; ++t) traced_idx[t] = scatter(traced, t);

  Plain out = Plain::Zero(kept_dim, kept_dim);
  for (Eigen::Index b = 0; b < kept_dim; ++b) {
    for (Eigen::Index a = 0; a < kept_dim; ++a) {
      for (Eigen::Index t = 0; t < traced_dim; ++t) {
        out(a, b) += state(kept_idx[a] | traced_idx[t], kept_idx[b] | traced_idx[t]);
      }
    }
  }
  return out;
}

/// Eigenvalues of a general (not necessarily Hermitian) 4x4 complex matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 4, 1> eigvals_4x4(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != 4 || m.cols() != 4) throw ArgumentError("eigvals_4x4 expects a 4x4 matrix");
  if (!all_finite(m)) throw ArgumentError("eigvals_4x4 input has non-finite entries");
  const Eigen::Matrix<Scalar, 4, 4> fixed = m;
  Eigen::ComplexEigenSolver<Eigen::Matrix<Scalar, 4, 4>> solver(fixed, false);
  if (solver.info() != Eigen::Success) throw NumericError("4x4 eigenvalue iteration did not converge");
  return solver.eigenvalues();
}

}  // namespace esdlab

#endif  // ESDLAB_QLINALG_HPP
