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

#ifndef ESDLAB_CHANNELS_HPP
#define ESDLAB_CHANNELS_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "esdlab/qlinalg.hpp"

namespace esdlab {

/// Ordered Kraus operators of a quantum channel, all of the same shape.
template <typename Real>
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix<Real>> operators) : operators_(std::move(operators)) {
    if (operators_.empty()) throw ArgumentError("Kraus channel needs at least one operator");
    for (const auto& k : operators_) {
      if (k.rows() != operators_.front().rows() || k.cols() != operators_.front().cols()) {
        throw ArgumentError("Kraus operators differ in shape");
      }
    }
    if (operators_.front().rows() == operators_.front().cols()) {
      terms_ = superoperator_terms(std::span<const Matrix<Real>>(operators_));
    }
  }

  const std::vector<Matrix<Real>>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }
  const Matrix<Real>& operator[](std::size_t i) const { return operators_[i]; }

  /// max |sum K^dagger K - I| over entries.
  Real completeness_error() const {
    const auto cols = operators_.front().cols();
    Matrix<Real> sum = Matrix<Real>::Zero(cols, cols);
    for (const auto& k : operators_) sum += k.adjoint() * k;
    return (sum - Matrix<Real>::Identity(cols, cols)).cwiseAbs().maxCoeff();
  }

  bool is_complete(Real tol = Real(1e-12)) const { return completeness_error() <= tol; }

  /// Sum of K rho K^dagger with each K acting on qubits starting at `first`.
  template <typename Derived>
  typename Derived::PlainObject apply(int first, const Eigen::MatrixBase<Derived>& rho) const {
    if (terms_.empty()) throw ArgumentError("channel is not square");
    return apply_superoperator_subsystem(std::span<const SuperTerm<std::complex<Real>>>(terms_),
                                         operators_.front().rows(), first, rho);
  }

 private:
  std::vector<Matrix<Real>> operators_;
  std::vector<SuperTerm<std::complex<Real>>> terms_;
};

template <typename Real>
void check_probability(Real gamma) {
  if (!(gamma >= Real(0) && gamma <= Real(1))) {
    throw ArgumentError("damping probability " + std::to_string(static_cast<double>(gamma)) +
                        " outside [0, 1]");
  }
}

/// Single-qubit amplitude damping with decay probability gamma.
template <typename Real>
class AmplitudeDamping {
 public:
  explicit AmplitudeDamping(Real gamma) : gamma_(gamma) { check_probability(gamma); }

  Real gamma() const { return gamma_; }

  /// {E0, E1}: E0 = diag(1, sqrt(1 - gamma)), E1 = sqrt(gamma) |0><1|.
  KrausChannel<Real> kraus() const {
    Matrix<Real> e0 = Matrix<Real>::Zero(2, 2);
    e0(0, 0) = Real(1);
    e0(1, 1) = std::sqrt(Real(1) - gamma_);
    Matrix<Real> e1 = Matrix<Real>::Zero(2, 2);
    e1(0, 1) = std::sqrt(gamma_);
    return KrausChannel<Real>({std::move(e0), std::move(e1)});
  }

 private:
  Real gamma_;
};

template <typename Real>
KrausChannel<Real> kraus_pair(Real gamma) {
  return AmplitudeDamping<Real>(gamma).kraus();
}

/// Damps each listed qubit independently, qubit q with probability gammas[q].
/// `gammas` holds one entry per qubit of the register.
template <typename Real, typename Derived>
typename Derived::PlainObject apply_independent(std::span<const Real> gammas,
                                                const Eigen::MatrixBase<Derived>& rho,
                                                std::span<const int> targets) {
  if (rho.rows() != rho.cols()) throw ArgumentError("density matrix must be square");
  const int n = qubit_count(rho.rows());
  if (static_cast<int>(gammas.size()) != n) {
    throw ArgumentError("need one damping probability per qubit");
  }
  std::vector<bool> seen(n, false);
  for (int t : targets) {
    if (t < 0 || t >= n) throw IndexError("damping target " + std::to_string(t) + " out of range");
    if (seen[t]) throw IndexError("damping target " + std::to_string(t) + " listed twice");
    seen[t] = true;
  }
  typename Derived::PlainObject out = rho;
  for (int t : targets) out = kraus_pair(gammas[t]).apply(t, out);
  return out;
}

/// Uniform damping probability on the listed qubits.
template <typename Real, typename Derived>
typename Derived::PlainObject apply_independent(Real gamma, const Eigen::MatrixBase<Derived>& rho,
                                                std::span<const int> targets) {
  check_probability(gamma);
  const std::vector<Real> gammas(qubit_count(rho.rows()), gamma);
  return apply_independent(std::span<const Real>(gammas), rho, targets);
}

/// Uniform damping on every qubit of the register.
template <typename Real, typename Derived>
typename Derived::PlainObject apply_independent(Real gamma, const Eigen::MatrixBase<Derived>& rho) {
  std::vector<int> all(qubit_count(rho.rows()));
  for (int q = 0; q < static_cast<int>(all.size()); ++q) all[q] = q;
  return apply_independent(gamma, rho, std::span<const int>(all));
}

}  // namespace esdlab

#endif  // ESDLAB_CHANNELS_HPP
