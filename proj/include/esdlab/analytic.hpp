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

// Closed forms for the damped fidelities and the uncoded Phi concurrence.
// These serve as independent checks on the numerical pipeline.

#ifndef ESDLAB_ANALYTIC_HPP
#define ESDLAB_ANALYTIC_HPP

#include "esdlab/states.hpp"

namespace esdlab::analytic {

/// Recovered-fidelity expansion, truncated after the gamma^2 term.
double coded_fidelity_series(Family family, double alpha, double beta, double gamma);

/// Uncoded fidelity. Exact for Phi and Psi; for Varphi only the expansion
/// through gamma^2 is available (see uncoded_fidelity_is_exact).
double uncoded_fidelity_exact(Family family, double alpha, double beta, double gamma);

bool uncoded_fidelity_is_exact(Family family);

/// 2 max(0, (1 - g)|cos a|(|sin a| - g|cos a|)); independent of beta.
double uncoded_phi_concurrence(double alpha, double beta, double gamma);

/// Where uncoded_phi_concurrence first reaches zero: |tan a| if below one.
/// Returns a negative value when no finite threshold exists.
double uncoded_phi_threshold(double alpha);

}  // namespace esdlab::analytic

#endif  // ESDLAB_ANALYTIC_HPP
