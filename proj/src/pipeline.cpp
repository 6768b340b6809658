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

#include "esdlab/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "esdlab/channels.hpp"
#include "esdlab/code41.hpp"

namespace esdlab {

namespace {

// Memoizes a curve; threshold and crossover searches revisit grid points.
Curve cached(Curve curve) {
  auto memo = std::make_shared<std::map<double, double>>();
  return [curve = std::move(curve), memo](double g) {
    auto it = memo->find(g);
    if (it == memo->end()) it = memo->emplace(g, curve(g)).first;
    return it->second;
  };
}

void notify(const StageObserver& observer, std::string_view stage, const MatrixXc& rho) {
  if (observer) observer(stage, rho);
}

}  // namespace

MetricResult run_uncoded(const StateFamily& spec, double gamma, const StageObserver& observer) {
  const State initial = make_uncoded(spec);
  MatrixXc rho = initial.density();
  notify(observer, "initial", rho);
  rho = apply_independent(gamma, rho);
  notify(observer, "damped", rho);
  return {fidelity(initial, rho), concurrence(rho)};
}

MetricResult run_coded(const StateFamily& spec, double gamma, const CodedOptions& options) {
  const Code41& code = options.code ? *options.code : Code41::standard();
  const State initial = make_uncoded(spec);
  MatrixXc rho = code.encode_two_qubits(initial).density();
  notify(options.observer, "initial", rho);
  rho = apply_independent(gamma, rho);
  notify(options.observer, "damped", rho);
  MatrixXc logical;
  if (options.recover) {
    rho = code.recover_block(code.recover_block(rho, 1), 2);
    notify(options.observer, "recovered", rho);
    logical = code.decode(rho);
  } else {
    logical = code.decode(rho, std::numeric_limits<double>::infinity());
  }
  notify(options.observer, "decoded", logical);
  return {fidelity(initial, logical), concurrence(logical)};
}

std::vector<double> gamma_grid(double lo, double hi, int steps) {
  check_probability(lo);
  check_probability(hi);
  if (lo > hi) throw ArgumentError("gamma range is reversed");
  if (lo == hi) return {lo};
  if (steps < 2) throw ArgumentError("a gamma range needs at least two steps");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) out[i] = lo + (hi - lo) * i / (steps - 1);
  out.back() = hi;
  return out;
}

std::vector<SimResult> sweep(const StateFamily& spec, const std::vector<double>& gammas,
                             SweepPaths paths, unsigned threads) {
  std::vector<SimResult> out(gammas.size());
  auto evaluate = [&](std::size_t i) {
    out[i].gamma = gammas[i];
    if (paths.uncoded) out[i].uncoded = run_uncoded(spec, gammas[i]);
    if (paths.coded) out[i].coded = run_coded(spec, gammas[i]);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(gammas.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < gammas.size(); ++i) evaluate(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < gammas.size(); i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::optional<double> esd_threshold(const Curve& curve, double tol, int grid_points) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const std::vector<double> grid = gamma_grid(0.0, 1.0, grid_points);
  auto is_zero = [&](double g) { return curve(g) < kZeroConcurrence; };

  // Last grid point that is still entangled; everything after it is zero.
  int last_alive = -1;
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
    if (!is_zero(grid[i])) last_alive = i;
  }
  if (last_alive < 0) return 0.0;
  if (last_alive == static_cast<int>(grid.size()) - 1) return std::nullopt;

  double lo = grid[last_alive];
  double hi = grid[last_alive + 1];
  if (hi == 1.0) {
    if (!is_zero(1.0 - tol)) return std::nullopt;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (is_zero(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<double> crossover(const Curve& a, const Curve& b, double tol, int grid_points) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  constexpr double kSignFloor = 1e-12;
  auto diff = [&](double g) { return a(g) - b(g); };
  auto sign = [](double d) { return d > kSignFloor ? 1 : (d < -kSignFloor ? -1 : 0); };

  const std::vector<double> grid = gamma_grid(0.0, 1.0, grid_points);
  int reference = 0;
  double last_signed = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const int s = sign(diff(grid[i]));
    if (s == 0) continue;
    if (reference == 0) {
      reference = s;
    } else if (s != reference) {
      double lo = last_signed;
      double hi = grid[i];
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (sign(diff(mid)) == reference ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    last_signed = grid[i];
  }
  return std::nullopt;
}

EsdReport esd_report(const StateFamily& spec, double tol) {
  const Curve uncoded = cached([spec](double g) { return run_uncoded(spec, g).concurrence; });
  const Curve coded = cached([spec](double g) { return run_coded(spec, g).concurrence; });
  EsdReport report{spec, esd_threshold(uncoded, tol), esd_threshold(coded, tol), std::nullopt};
  report.crossover_gamma = crossover(coded, uncoded, tol);
  return report;
}

}  // namespace esdlab
