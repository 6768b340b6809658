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

#ifndef ESDLAB_PIPELINE_HPP
#define ESDLAB_PIPELINE_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "esdlab/metrics.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

/// Concurrence at or below this value counts as zero for threshold search.
inline constexpr double kZeroConcurrence = 1e-9;
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr int kDefaultGridPoints = 201;

/// Receives the register after each named stage ("initial", "damped",
/// "recovered", "decoded").
using StageObserver = std::function<void(std::string_view stage, const MatrixXc& rho)>;

class Code41;

struct CodedOptions {
  bool recover = true;
  StageObserver observer;
  /// Code tables to use; the standard code when null.
  const Code41* code = nullptr;
};

/// Damps both qubits of the bare state and scores it against the initial state.
MetricResult run_uncoded(const StateFamily& spec, double gamma,
                         const StageObserver& observer = nullptr);

/// Encode, damp all eight physical qubits, recover each block, decode and
/// score against the initial two-qubit state. With recovery disabled the
/// damped register is projected onto the code space before decoding
/// (only meaningful at gamma = 0).
MetricResult run_coded(const StateFamily& spec, double gamma, const CodedOptions& options = {});

struct SimResult {
  double gamma = 0.0;
  std::optional<MetricResult> uncoded;
  std::optional<MetricResult> coded;
};

struct SweepPaths {
  bool uncoded = true;
  bool coded = true;
};

/// `steps` evenly spaced points on [lo, hi]; a single point when lo == hi.
std::vector<double> gamma_grid(double lo, double hi, int steps);

/// Evaluates every grid point, possibly on several threads. Results are
/// ordered as the grid.
std::vector<SimResult> sweep(const StateFamily& spec, const std::vector<double>& gammas,
                             SweepPaths paths = {}, unsigned threads = 0);

using Curve = std::function<double(double)>;

/// Smallest gamma after which the curve stays below kZeroConcurrence on the
/// coarse grid, refined by bisection to `tol`. Returns 0 for a curve that is
/// zero everywhere and nullopt when it is still positive at 1 - tol.
std::optional<double> esd_threshold(const Curve& curve, double tol = kDefaultTolerance,
                                    int grid_points = kDefaultGridPoints);

/// Smallest gamma > 0 at which a - b changes sign, or nullopt.
std::optional<double> crossover(const Curve& a, const Curve& b, double tol = kDefaultTolerance,
                                int grid_points = kDefaultGridPoints);

struct EsdReport {
  StateFamily spec;
  std::optional<double> gamma_star_uncoded;
  std::optional<double> gamma_star_coded;
  /// First sign change of coded minus uncoded concurrence.
  std::optional<double> crossover_gamma;
};

EsdReport esd_report(const StateFamily& spec, double tol = kDefaultTolerance);

}  // namespace esdlab

#endif  // ESDLAB_PIPELINE_HPP
