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

#ifndef ESDLAB_STATES_HPP
#define ESDLAB_STATES_HPP

#include <optional>
#include <string_view>

#include "esdlab/qlinalg.hpp"

namespace esdlab {

/// Bell-like initial states, with c = cos(alpha), s = e^{i beta} sin(alpha):
///   Phi:    c|11> + s|00>
///   Psi:    c|10> + s|01>
///   Varphi: c|11> + s|10>   (separable)
enum class Family { Phi, Psi, Varphi };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct StateFamily {
  Family family = Family::Phi;
  double alpha = 0.0;
  double beta = 0.0;
};

State make_uncoded(const StateFamily& spec);
/// The same amplitudes on the logical basis of two four-qubit blocks.
State make_coded(const StateFamily& spec);

}  // namespace esdlab

#endif  // ESDLAB_STATES_HPP
