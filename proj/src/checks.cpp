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

#include "esdlab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "esdlab/analytic.hpp"
#include "esdlab/channels.hpp"
#include "esdlab/pipeline.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExact = 1e-12;

std::string at_most(double tol) {
  std::ostringstream s;
  s << "<= " << tol;
  return s.str();
}

CheckOutcome bounded(std::string name, double measured, double tol) {
  return {std::move(name), measured, at_most(tol), measured <= tol};
}

double max_abs(const MatrixXc& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::array<double, 2> remainder_ratios(const std::function<double(double)>& exact,
                                       const std::function<double(double)>& series) {
  std::array<double, 3> r{};
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = std::abs(exact(kRemainderGammas[i]) - series(kRemainderGammas[i]));
  }
  return {r[0] / r[1], r[1] / r[2]};
}

std::vector<CheckOutcome> run_checks(const Code41& code) {
  std::vector<CheckOutcome> out;
  std::mt19937_64 rng(20080229);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double kraus = 0.0;
  for (int t = 0; t < 1000; ++t) kraus = std::max(kraus, kraus_pair(unit(rng)).completeness_error());
  out.push_back(bounded("amplitude damping completeness (1000 random gamma)", kraus, kExact));

  out.push_back(bounded("syndrome basis orthonormality",
                        max_abs(code.basis().gram() - MatrixXc::Identity(kBlockDim, kBlockDim)),
                        kExact));

  const MatrixXc u = code.syndrome_unitary();
  out.push_back(bounded("syndrome unitary U^dagger U = I",
                        max_abs(u.adjoint() * u - MatrixXc::Identity(kBlockDim, kBlockDim)),
                        kExact));

  out.push_back(
      bounded("recovery completeness", code.recovery_channel().completeness_error(), kExact));

  double frame = 0.0;
  for (int k = 0; k < kCorrectableSyndromes; ++k) {
    const MatrixXc via_unitary = code.logical_correction(k) * u * code.basis().projector(k);
    frame = std::max(frame, max_abs(code.recovery(k).kraus_set.front() - via_unitary));
  }
  out.push_back(bounded("recovery matches correction after syndrome unitary", frame, kExact));

  double single_jump = 0.0;
  const auto& channel = code.recovery_channel();
  for (int k = 1; k < kCorrectableSyndromes; ++k) {
    for (int i = 0; i < 2; ++i) {
      const VectorXc& r = code.basis()(k, i);
      const MatrixXc recovered = channel.apply(0, MatrixXc(r * r.adjoint()));
      const VectorXc& target = code.encoder().col(i);
      single_jump = std::max(single_jump, max_abs(recovered - target * target.adjoint()));
    }
  }
  out.push_back(bounded("single-jump states recover to codewords", single_jump, kExact));

  double round_trip = 0.0;
  std::normal_distribution<double> normal;
  for (int t = 0; t < 20; ++t) {
    VectorXc v(4);
    for (int j = 0; j < 4; ++j) v(j) = {normal(rng), normal(rng)};
    const State s = State::normalized(v);
    const MatrixXc decoded = code.decode(code.encode_two_qubits(s).density());
    round_trip = std::max(round_trip, max_abs(decoded - s.density()));
  }
  out.push_back(bounded("decode(encode(rho)) = rho", round_trip, kExact));

  const auto grid = gamma_grid(0.0, 1.0, 101);
  for (Family family : {Family::Phi, Family::Psi}) {
    double worst = 0.0;
    for (double alpha : {kPi / 12, kPi / 5, kPi / 4, 1.1}) {
      for (double g : grid) {
        const double numeric = run_uncoded({family, alpha, 0.3}, g).fidelity;
        worst = std::max(worst, std::abs(numeric - analytic::uncoded_fidelity_exact(family, alpha, 0.3, g)));
      }
    }
    out.push_back(bounded("uncoded " + std::string(to_string(family)) +
                              " fidelity vs closed form (max abs error)",
                          worst, kExact));
  }

  double conc = 0.0;
  for (double alpha : {kPi / 12, kPi / 8, kPi / 4, kPi / 3}) {
    for (double g : grid) {
      conc = std::max(conc, std::abs(run_uncoded({Family::Phi, alpha, 0.0}, g).concurrence -
                                     analytic::uncoded_phi_concurrence(alpha, 0.0, g)));
    }
  }
  out.push_back(bounded("uncoded phi concurrence vs closed form", conc, 1e-10));

  auto ratio_check = [&](const std::string& name, const std::function<double(double)>& exact,
                         const std::function<double(double)>& series) {
    std::array<double, 2> r{};
    try {
      r = remainder_ratios(exact, series);
    } catch (const std::exception&) {
      out.push_back({name, std::nan(""), "pipeline raised an error", false});
      return;
    }
    const double worst = std::abs(std::log(r[0] / 1000.0)) > std::abs(std::log(r[1] / 1000.0)) ? r[0] : r[1];
    const bool ok = std::all_of(r.begin(), r.end(), [](double x) { return x >= 500.0 && x <= 2000.0; });
    out.push_back({name, worst, "remainder ratio per decade in [500, 2000]", ok});
  };
  for (Family family : {Family::Phi, Family::Psi, Family::Varphi}) {
    for (auto [alpha, label] : {std::pair{kPi / 12, "pi/12"}, std::pair{kPi / 4, "pi/4"}}) {
      const StateFamily spec{family, alpha, 0.0};
      CodedOptions options;
      options.code = &code;
      ratio_check("coded " + std::string(to_string(family)) + " fidelity series, alpha=" + label,
                  [&](double g) { return run_coded(spec, g, options).fidelity; },
                  [&](double g) { return analytic::coded_fidelity_series(family, alpha, 0.0, g); });
    }
  }
  ratio_check("uncoded varphi fidelity series, alpha=pi/5",
              [](double g) { return run_uncoded({Family::Varphi, kPi / 5, 0.0}, g).fidelity; },
              [](double g) { return analytic::uncoded_fidelity_exact(Family::Varphi, kPi / 5, 0.0, g); });

  double threshold = 0.0;
  for (double alpha : {kPi / 12, kPi / 8, kPi / 6}) {
    const auto found = esd_threshold([&](double g) { return run_uncoded({Family::Phi, alpha, 0.0}, g).concurrence; });
    threshold = std::max(threshold, found ? std::abs(*found - std::tan(alpha)) : 1.0);
  }
  out.push_back(bounded("uncoded phi ESD threshold = |tan alpha|", threshold, 1e-6));

  return out;
}

}  // namespace esdlab
