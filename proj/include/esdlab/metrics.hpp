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

#ifndef ESDLAB_METRICS_HPP
#define ESDLAB_METRICS_HPP

#include <Eigen/Dense>

#include "esdlab/qlinalg.hpp"

namespace esdlab {

struct MetricResult {
  double fidelity = 0.0;
  double concurrence = 0.0;
};

/// Numerical dust below this magnitude is treated as zero, and values up to
/// this far outside [0, 1] are clamped back into it.
inline constexpr double kMetricClampWindow = 1e-10;

/// Overlap probability <ref|rho|ref>.
double fidelity(const State& reference, const MatrixXc& rho);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4).
double concurrence(const MatrixXc& rho);

/// The Wootters values l1 >= ... >= l4: square roots of the eigenvalues of
/// rho * rho_tilde, obtained as singular values of sqrt(rho) sqrt(rho_tilde).
Eigen::Vector4d wootters_lambdas(const MatrixXc& rho);

/// Same quantity computed directly from eigvals_4x4(rho * rho_tilde). Slower
/// to converge near zero eigenvalues (error ~ sqrt(machine epsilon)).
double concurrence_from_spectrum(const MatrixXc& rho);

/// rho_tilde = (sy (x) sy) conj(rho) (sy (x) sy).
Matrix4c spin_flip(const MatrixXc& rho);

/// Closed form 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)),
/// valid only for X-form matrices.
double concurrence_x_form(const MatrixXc& rho);

/// Largest magnitude of entries off the diagonal and antidiagonal.
double x_form_violation(const MatrixXc& rho);

}  // namespace esdlab

#endif  // ESDLAB_METRICS_HPP
