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

// esdlab: entanglement sudden death under amplitude damping, with and
// without the four-qubit code.
//
//   esdlab sweep     --family psi --alpha pi/4 --code both --out psi.csv
//   esdlab threshold --family phi --alpha pi/12
//   esdlab figure 2b --out fig2b.csv --plot fig2b.svg
//   esdlab check

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "esdlab/cli.hpp"

namespace {

using esdlab::cli::CodeSelection;
using esdlab::cli::RunConfig;

struct RawOptions {
  std::string family = "phi";
  std::string alpha = "pi/4";
  std::string beta = "0";
  std::string code = "both";
};

void add_state_options(CLI::App* cmd, RawOptions& raw, RunConfig& config, bool range) {
  cmd->add_option("--family", raw.family, "phi | psi | varphi")->capture_default_str();
  cmd->add_option("--alpha", raw.alpha, "radians, or e.g. pi/12")->capture_default_str();
  cmd->add_option("--beta", raw.beta, "radians, or e.g. pi/2")->capture_default_str();
  cmd->add_option("--code", raw.code, "none | c41 | both")->capture_default_str();
  if (range) {
    cmd->add_option("--gamma-min", config.gamma_min)->capture_default_str();
    cmd->add_option("--gamma-max", config.gamma_max)->capture_default_str();
    cmd->add_option("--steps", config.steps)->capture_default_str();
  }
}

void resolve(const RawOptions& raw, RunConfig& config) {
  const auto family = esdlab::parse_family(raw.family);
  if (!family) throw esdlab::cli::UsageError("unknown family '" + raw.family + "'");
  const auto code = esdlab::cli::parse_code(raw.code);
  if (!code) throw esdlab::cli::UsageError("unknown code selection '" + raw.code + "'");
  config.spec = {*family, esdlab::cli::parse_angle(raw.alpha), esdlab::cli::parse_angle(raw.beta)};
  config.code = *code;
  config.validate();
}

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file) throw esdlab::IoError("cannot open '" + path + "' for writing");
  return file;
}

void close_output(std::ofstream& file, const std::string& path) {
  file.close();
  if (!file) throw esdlab::IoError("failed writing '" + path + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Entanglement sudden death under amplitude damping with the [4,1] code", "esdlab"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto* sweep = app.add_subcommand("sweep", "CSV of fidelity and concurrence over a gamma grid");
  add_state_options(sweep, raw, config, true);
  sweep->add_option("--out", config.output_path, "CSV path (default: stdout)");

  auto* threshold = app.add_subcommand("threshold", "ESD thresholds as key=value lines");
  add_state_options(threshold, raw, config, false);
  threshold->add_option("--out", config.output_path, "report path (default: stdout)");

  auto* figure = app.add_subcommand("figure", "curves of one figure panel");
  figure->add_option("id", config.figure_id, "1a 1b 2a 2b 3a 3b")->required();
  figure->add_option("--out", config.output_path, "CSV path (default: stdout)");
  figure->add_option("--plot", config.plot_path, "SVG line chart path");

  auto* check = app.add_subcommand("check", "run the analytic validation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? esdlab::cli::kSuccess : esdlab::cli::kUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!config.output_path.empty()) file = open_output(config.output_path);
  std::ostream& out = file ? *file : std::cout;

  if (*sweep) {
    resolve(raw, config);
    esdlab::cli::cmd_sweep(config, out);
  } else if (*threshold) {
    resolve(raw, config);
    esdlab::cli::cmd_threshold(config, out);
  } else if (*figure) {
    esdlab::cli::figure_spec(config.figure_id);  // reject unknown ids before any work
    std::unique_ptr<std::ofstream> plot;
    if (!config.plot_path.empty()) plot = open_output(config.plot_path);
    esdlab::cli::cmd_figure(config.figure_id, out, plot.get());
    if (plot) close_output(*plot, config.plot_path);
  } else if (*check) {
    if (!esdlab::cli::cmd_check(out)) {
      if (file) close_output(*file, config.output_path);
      return esdlab::cli::kNumericFailure;
    }
  }
  if (file) close_output(*file, config.output_path);
  return esdlab::cli::kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const esdlab::cli::UsageError& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return esdlab::cli::kUsage;
  } catch (const esdlab::IoError& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return esdlab::cli::kIoFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return esdlab::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "esdlab: " << e.what() << '\n';
    return esdlab::cli::kNumericFailure;
  }
}
