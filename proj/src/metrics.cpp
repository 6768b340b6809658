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

#include "esdlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace esdlab {

namespace {

double clamp_unit(double value, const char* what) {
  if (!std::isfinite(value) || value < -kMetricClampWindow || value > 1.0 + kMetricClampWindow) {
    throw NumericError(std::string(what) + " " + std::to_string(value) + " outside [0, 1]");
  }
  return std::clamp(value, 0.0, 1.0);
}

void require_two_qubit(const MatrixXc& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw ArgumentError("expected a 4x4 density matrix");
  if (!all_finite(rho)) throw ArgumentError("density matrix has non-finite entries");
}

Matrix4c sigma_yy() {
  // sy (x) sy is real: antidiagonal (-1, 1, 1, -1).
  Matrix4c yy = Matrix4c::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double finish(double raw) {
  if (raw < kMetricClampWindow) return 0.0;
  return clamp_unit(raw, "concurrence");
}

}  // namespace

double fidelity(const State& reference, const MatrixXc& rho) {
  if (rho.rows() != reference.dim() || rho.cols() != reference.dim()) {
    throw ArgumentError("fidelity: reference has dimension " + std::to_string(reference.dim()) +
                        ", state has " + std::to_string(rho.rows()) + "x" +
                        std::to_string(rho.cols()));
  }
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw ArgumentError("fidelity: state trace is not 1");
  const auto& v = reference.amplitudes();
  return clamp_unit(v.dot(rho * v).real(), "fidelity");
}

Matrix4c spin_flip(const MatrixXc& rho) {
  require_two_qubit(rho);
  const Matrix4c yy = sigma_yy();
  return yy * rho.conjugate() * yy;
}

Eigen::Vector4d wootters_lambdas(const MatrixXc& rho) {
  require_two_qubit(rho);
  const Matrix4c herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(herm);
  if (eig.info() != Eigen::Success) throw NumericError("density matrix diagonalization failed");
  // Eigenvalues at the level of rounding noise are true zeros; their square
  // roots would otherwise inject ~1e-8 errors.
  const double floor =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::Vector4d roots;
  for (int i = 0; i < 4; ++i) {
    const double w = eig.eigenvalues()(i);
    roots(i) = w > floor ? std::sqrt(w) : 0.0;
  }
  const Matrix4c sqrt_rho =
      eig.eigenvectors() * roots.cast<std::complex<double>>().asDiagonal() * eig.eigenvectors().adjoint();
  const Matrix4c product = sqrt_rho * sigma_yy() * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix4c> svd(product);
  return svd.singularValues();  // already descending
}

double concurrence(const MatrixXc& rho) {
  const Eigen::Vector4d l = wootters_lambdas(rho);
  return finish(l(0) - l(1) - l(2) - l(3));
}

double concurrence_from_spectrum(const MatrixXc& rho) {
  require_two_qubit(rho);
  const Matrix4c product = rho * spin_flip(rho);
  const Vector4c eig = eigvals_4x4(product);
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) {
    if (std::abs(eig(i).imag()) > 1e-10 || eig(i).real() < -1e-10) {
      throw NumericError("rho * rho_tilde has an eigenvalue off the non-negative axis");
    }
    l[i] = std::sqrt(std::max(0.0, eig(i).real()));
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return finish(l[0] - l[1] - l[2] - l[3]);
}

double concurrence_x_form(const MatrixXc& rho) {
  require_two_qubit(rho);
  const double outer = std::abs(rho(0, 3)) - std::sqrt(std::max(0.0, rho(1, 1).real() * rho(2, 2).real()));
  const double inner = std::abs(rho(1, 2)) - std::sqrt(std::max(0.0, rho(0, 0).real() * rho(3, 3).real()));
  return finish(2.0 * std::max({0.0, outer, inner}));
}

double x_form_violation(const MatrixXc& rho) {
  require_two_qubit(rho);
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r != c && r + c != 3) worst = std::max(worst, std::abs(rho(r, c)));
    }
  }
  return worst;
}

}  // namespace esdlab
