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

#include "esdlab/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "esdlab/channels.hpp"

namespace esdlab::analytic {

double coded_fidelity_series(Family family, double alpha, double beta, double gamma) {
  check_probability(gamma);
  const double g2 = gamma * gamma;
  const double c2 = std::cos(2.0 * alpha);
  const double c4 = std::cos(4.0 * alpha);
  switch (family) {
    case Family::Phi:
      return 1.0 - 0.5 * g2 * (7.0 - 3.0 * c2 - c4);
    case Family::Psi:
      return 1.0 - 0.5 * g2 * (7.0 - c4);
    case Family::Varphi: {
      const double s2 = std::sin(2.0 * alpha);
      return 1.0 - g2 / 8.0 * (17.0 - 6.0 * c2 + c4 - 2.0 * std::cos(2.0 * beta) * s2 * s2);
    }
  }
  return 1.0;
}

double uncoded_fidelity_exact(Family family, double alpha, double /*beta*/, double gamma) {
  check_probability(gamma);
  const double cos_sq = std::cos(alpha) * std::cos(alpha);
  switch (family) {
    case Family::Phi:
      return 1.0 - 2.0 * gamma * cos_sq + gamma * gamma * cos_sq;
    case Family::Psi:
      return 1.0 - gamma;
    case Family::Varphi: {
      const double c2 = std::cos(2.0 * alpha);
      const double c4 = std::cos(4.0 * alpha);
      return 1.0 - gamma / 8.0 * (11.0 + 4.0 * c2 + c4) +
             gamma * gamma / 8.0 * cos_sq * (3.0 + 5.0 * c2);
    }
  }
  return 1.0;
}

bool uncoded_fidelity_is_exact(Family family) { return family != Family::Varphi; }

double uncoded_phi_concurrence(double alpha, double /*beta*/, double gamma) {
  check_probability(gamma);
  const double c = std::abs(std::cos(alpha));
  const double s = std::abs(std::sin(alpha));
  return 2.0 * std::max(0.0, (1.0 - gamma) * c * (s - gamma * c));
}

double uncoded_phi_threshold(double alpha) {
  const double t = std::abs(std::tan(alpha));
  return t < 1.0 ? t : -1.0;
}

}  // namespace esdlab::analytic
