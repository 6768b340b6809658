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

// Coded ESD thresholds found by esd_threshold at tolerance 1e-6 on the
// default grid, beta = 0. Regression values, frozen after first verification.

#ifndef ESDLAB_TESTS_FROZEN_HPP
#define ESDLAB_TESTS_FROZEN_HPP

namespace frozen {

inline constexpr double kCodedPhiPi12 = 0.412511901855;
inline constexpr double kCodedPhiPi4 = 0.479889831543;
inline constexpr double kCodedPsiPi12 = 0.383110046387;
inline constexpr double kCodedPsiPi4 = 0.482471008301;
inline constexpr double kTolerance = 2e-6;

}  // namespace frozen

#endif  // ESDLAB_TESTS_FROZEN_HPP
