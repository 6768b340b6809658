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

#include "esdlab/states.hpp"

#include <cmath>
#include <complex>

#include "esdlab/code41.hpp"

namespace esdlab {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Phi:
      return "phi";
    case Family::Psi:
      return "psi";
    case Family::Varphi:
      return "varphi";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "phi") return Family::Phi;
  if (name == "psi") return Family::Psi;
  if (name == "varphi") return Family::Varphi;
  return std::nullopt;
}

State make_uncoded(const StateFamily& spec) {
  const std::complex<double> first = std::cos(spec.alpha);
  const std::complex<double> second = std::polar(1.0, spec.beta) * std::sin(spec.alpha);
  VectorXc v = VectorXc::Zero(4);
  switch (spec.family) {
    case Family::Phi:
      v(0b11) = first;
      v(0b00) = second;
      break;
    case Family::Psi:
      v(0b10) = first;
      v(0b01) = second;
      break;
    case Family::Varphi:
      v(0b11) = first;
      v(0b10) = second;
      break;
  }
  // cos^2 + sin^2 rounds to within a few ulp of one; renormalize anyway.
  return State::normalized(std::move(v));
}

State make_coded(const StateFamily& spec) { return encode_two_qubits(make_uncoded(spec)); }

}  // namespace esdlab
