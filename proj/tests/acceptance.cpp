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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "esdlab/analytic.hpp"
#include "esdlab/channels.hpp"
#include "esdlab/cli.hpp"
#include "esdlab/code41.hpp"
#include "esdlab/pipeline.hpp"
#include "frozen.hpp"

namespace {

using namespace esdlab;
constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Verdict()> run;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double max_abs(const MatrixXc& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<std::pair<double, double>> random_angles(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> a(0.0, kPi / 2), b(0.0, 2 * kPi);
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i < 20; ++i) out.emplace_back(a(rng), b(rng));
  return out;
}

Verdict uncoded_exact(Family family) {
  const auto grid = gamma_grid(0.0, 1.0, kDefaultGridPoints);
  double worst = 0.0;
  for (auto [alpha, beta] : random_angles(family == Family::Psi ? 101 : 202)) {
    const double c2 = std::cos(alpha) * std::cos(alpha);
    for (double g : grid) {
      const double expected = family == Family::Psi ? 1 - g : 1 - 2 * g * c2 + g * g * c2;
      worst = std::max(worst, std::abs(run_uncoded({family, alpha, beta}, g).fidelity - expected));
    }
  }
  return {worst <= 1e-12, fmt("max deviation %.3g over 201 gamma x 20 (alpha, beta)", worst)};
}

Verdict coded_series() {
  double lo = 1e300, hi = 0.0;
  for (Family f : {Family::Phi, Family::Psi, Family::Varphi}) {
    for (double alpha : {kPi / 12, kPi / 4}) {
      const StateFamily spec{f, alpha, 0.0};
      std::array<double, 3> r{};
      for (int i = 0; i < 3; ++i) {
        const double g = std::pow(10.0, -2 - i);
        r[i] = std::abs(run_coded(spec, g).fidelity - analytic::coded_fidelity_series(f, alpha, 0.0, g));
      }
      for (double ratio : {r[0] / r[1], r[1] / r[2]}) {
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
  }
  return {lo >= 500 && hi <= 2000, fmt("remainder ratios per decade in [%.1f, %.1f], need [500, 2000]", lo, hi)};
}

Verdict uncoded_phi_threshold() {
  double worst = 0.0;
  for (double alpha : {kPi / 12, kPi / 8, kPi / 6}) {
    const auto t = esd_threshold([&](double g) { return run_uncoded({Family::Phi, alpha, 0.0}, g).concurrence; });
    worst = std::max(worst, t ? std::abs(*t - std::tan(alpha)) : 1.0);
  }
  return {worst <= 1e-6, fmt("max |gamma* - tan(alpha)| = %.3g", worst)};
}

Verdict uncoded_psi_no_esd() {
  double smallest = 1.0;
  for (double alpha : {kPi / 12, kPi / 4}) {
    for (int i = 0; i <= 999; ++i) {
      smallest = std::min(smallest, run_uncoded({Family::Psi, alpha, 0.0}, i / 1000.0).concurrence);
    }
  }
  return {smallest > 0.0, fmt("min concurrence on gamma = 0, 0.001, ..., 0.999: %.3g", smallest)};
}

std::optional<double> coded_threshold(Family f, double alpha) {
  return esd_threshold([&](double g) { return run_coded({f, alpha, 0.0}, g).concurrence; });
}

Verdict coded_finite_thresholds() {
  struct Case {
    const char* name;
    Family f;
    double alpha;
    double frozen;
  };
  const Case cases[] = {{"phi pi/4", Family::Phi, kPi / 4, frozen::kCodedPhiPi4},
                        {"psi pi/12", Family::Psi, kPi / 12, frozen::kCodedPsiPi12},
                        {"psi pi/4", Family::Psi, kPi / 4, frozen::kCodedPsiPi4}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto t = coded_threshold(c.f, c.alpha);
    const bool finite = t && *t > 0 && *t < 1;
    const bool matches = t && std::abs(*t - c.frozen) <= frozen::kTolerance;
    ok = ok && finite && matches;
    detail += std::string(detail.empty() ? "" : ", ") + c.name + " " +
              (t ? fmt("%.7f", *t) : std::string("NONE")) + (matches ? "" : " (frozen mismatch)");
  }
  return {ok, "gamma*: " + detail};
}

Verdict tolerance_ratio() {
  const auto t = coded_threshold(Family::Phi, kPi / 12);
  if (!t) return {false, "coded phi pi/12 has no threshold"};
  const double ratio = *t / std::tan(kPi / 12);
  return {ratio >= 1.5 && ratio <= 2.5, fmt("coded gamma* %.7f / tan(pi/12) = %.4f, need [1.5, 2.5]", *t, ratio)};
}

Verdict small_and_large_gamma() {
  bool ok = true;
  double min_df = 1e300, min_dc = 1e300;
  for (Family f : {Family::Phi, Family::Psi}) {
    for (double alpha : {kPi / 12, kPi / 4}) {
      const auto c = run_coded({f, alpha, 0.0}, 0.02);
      const auto u = run_uncoded({f, alpha, 0.0}, 0.02);
      min_df = std::min(min_df, c.fidelity - u.fidelity);
      min_dc = std::min(min_dc, c.concurrence - u.concurrence);
    }
  }
  ok = min_df > 0 && min_dc > 0;
  const auto c = run_coded({Family::Psi, kPi / 4, 0.0}, 0.6);
  const auto u = run_uncoded({Family::Psi, kPi / 4, 0.0}, 0.6);
  ok = ok && c.concurrence <= u.concurrence;
  return {ok, fmt("gamma=0.02: min coded-uncoded F %.3g, C %.3g; ", min_df, min_dc) +
                  fmt("gamma=0.6 psi pi/4: coded C %.4g <= uncoded C %.4g", c.concurrence, u.concurrence)};
}

Verdict structural() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  auto random_ket = [&](Eigen::Index d) {
    VectorXc v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = {normal(rng), normal(rng)};
    return VectorXc(v / v.norm());
  };
  const Code41& code = Code41::standard();
  const MatrixXc u = code.syndrome_unitary();
  double kraus = 0, unitary = max_abs(u.adjoint() * u - MatrixXc::Identity(16, 16));
  double gram = max_abs(code.basis().gram() - MatrixXc::Identity(16, 16));
  double trace = 0, round_trip = 0;
  kraus = code.recovery_channel().completeness_error();
  for (int t = 0; t < 1000; ++t) {
    kraus = std::max(kraus, kraus_pair(unit(rng)).completeness_error());
    const VectorXc v16 = random_ket(16);
    unitary = std::max(unitary, std::abs((u * v16).norm() - 1.0));
    const VectorXc v256 = random_ket(256);
    const MatrixXc rho = v256 * v256.adjoint();
    trace = std::max(trace, std::abs(code.recover_block(rho, 1 + t % 2).trace() - 1.0));
    const State s(random_ket(4));
    round_trip = std::max(round_trip, max_abs(code.decode(code.encode_two_qubits(s).density()) - s.density()));
  }
  const double worst = std::max({kraus, unitary, gram, trace, round_trip});
  std::ostringstream d;
  d << "1000 trials: completeness " << kraus << ", unitarity " << unitary << ", gram " << gram
    << ", recover trace " << trace << ", decode(encode) " << round_trip;
  return {worst <= 1e-12, d.str()};
}

Verdict figures() {
  bool ok = true;
  double endpoint = 0.0, identity = 0.0;
  bool deterministic = true;
  for (const char* id : {"1a", "1b", "2a", "2b", "3a", "3b"}) {
    std::ostringstream first, second;
    const auto table = cli::cmd_figure(id, first, nullptr);
    cli::cmd_figure(id, second, nullptr);
    deterministic = deterministic && first.str() == second.str();
    const double alpha = cli::figure_spec(id).alpha;
    const auto& row0 = table.rows.front();
    const bool fidelity_panel = id[0] == '1';
    for (std::size_t c = 1; c < row0.size(); ++c) {
      const bool is_concurrence = table.header[c].rfind("concurrence", 0) == 0;
      const double expected = is_concurrence ? std::sin(2 * alpha) : 1.0;
      endpoint = std::max(endpoint, std::abs(row0[c].value() - expected));
    }
    if (fidelity_panel) continue;
    if (std::string(id) == "3b") {
      for (const auto& r : table.rows) {
        identity = std::max({identity, std::abs(*r[1] - (1 - *r[0])), std::abs(*r[2] - (1 - *r[0]))});
      }
    }
  }
  ok = deterministic && endpoint <= 1e-12 && identity <= 1e-12;
  return {ok, std::string(deterministic ? "CSV byte-identical on rerun" : "CSV differs on rerun") +
                  fmt(", max endpoint error %.3g, 3b uncoded F=C=1-gamma error %.3g", endpoint, identity)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "uncoded psi fidelity = 1 - gamma", 1.0, [] { return uncoded_exact(Family::Psi); }},
      {2, "uncoded phi fidelity closed form", 1.0, [] { return uncoded_exact(Family::Phi); }},
      {3, "coded fidelity quadratic series, cubic remainder", 5.0, coded_series},
      {4, "uncoded phi ESD threshold = |tan alpha|", 2.0, uncoded_phi_threshold},
      {5, "uncoded psi has no ESD", 2.0, uncoded_psi_no_esd},
      {6, "coded phi pi/4, psi pi/12, psi pi/4 reach ESD below 1", 10.0, coded_finite_thresholds},
      {7, "coded phi pi/12 threshold 1.5-2.5x uncoded", 5.0, tolerance_ratio},
      {8, "small-gamma gain, large-gamma reversal", 5.0, small_and_large_gamma},
      {9, "structural invariants", 10.0, structural},
      {10, "figure reproduction", 60.0, figures},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool passed = v.passed && in_time;
    if (!passed) ++failed;
    std::printf("%s criterion %2d: %s | %s | %.2f s (budget %.0f s)%s\n", passed ? "PASS" : "FAIL", c.id,
                c.title.c_str(), v.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
