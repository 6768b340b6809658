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

#ifndef ESDLAB_CHECKS_HPP
#define ESDLAB_CHECKS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "esdlab/code41.hpp"

namespace esdlab {

struct CheckOutcome {
  std::string name;
  double measured = 0.0;
  /// Human-readable pass condition, e.g. "<= 1e-12".
  std::string criterion;
  bool passed = false;
};

/// Gamma values at which expansion remainders are compared.
inline constexpr std::array<double, 3> kRemainderGammas{1e-2, 1e-3, 1e-4};

/// Ratios |r(1e-2)|/|r(1e-3)| and |r(1e-3)|/|r(1e-4)| of the remainder
/// r = exact - series. A cubic remainder gives ratios near 1000.
std::array<double, 2> remainder_ratios(const std::function<double(double)>& exact,
                                       const std::function<double(double)>& series);

/// Structural checks of `code` plus analytic-vs-numeric agreement of the
/// pipeline. Cheap enough to run from the command line.
std::vector<CheckOutcome> run_checks(const Code41& code = Code41::standard());

}  // namespace esdlab

#endif  // ESDLAB_CHECKS_HPP
