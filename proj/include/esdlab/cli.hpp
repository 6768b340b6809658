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

#ifndef ESDLAB_CLI_HPP
#define ESDLAB_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "esdlab/pipeline.hpp"
#include "esdlab/states.hpp"

namespace esdlab {

class Code41;

namespace cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kNumericFailure = 2, kIoFailure = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Sweep, Threshold, Figure, Check };
enum class CodeSelection { None, C41, Both };

std::optional<CodeSelection> parse_code(std::string_view name);

/// Decimal radians, or multiples of pi such as "pi/12", "-pi/4", "3pi/8",
/// "3*pi/8", "pi".
double parse_angle(std::string_view text);

struct RunConfig {
  Command command = Command::Sweep;
  StateFamily spec{Family::Phi, 0.0, 0.0};
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  int steps = kDefaultGridPoints;
  CodeSelection code = CodeSelection::Both;
  std::string output_path;  // empty: standard output
  std::string plot_path;    // empty: no plot
  std::string figure_id;

  /// Throws UsageError on a malformed range or step count.
  void validate() const;
};

/// Column-oriented numeric table; missing values print as NA.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Twelve significant digits, printf %.12g.
std::string format_number(double value);

/// Comma-separated, LF line endings, header first.
void write_csv(std::ostream& out, const Table& table);

Table sweep_table(const std::vector<SimResult>& results);

Table cmd_sweep(const RunConfig& config, std::ostream& csv);

EsdReport cmd_threshold(const RunConfig& config, std::ostream& out);

struct FigureSpec {
  std::string id;
  std::string title;
  std::string y_label;
  double alpha = 0.0;
};

/// Known panels: 1a 1b 2a 2b 3a 3b. Throws UsageError otherwise.
FigureSpec figure_spec(std::string_view id);

/// Curves of one figure panel on the default 201-point grid, beta = 0.
Table figure_table(std::string_view id);

/// Writes the CSV and, when `plot` is non-null, an SVG line chart.
Table cmd_figure(std::string_view id, std::ostream& csv, std::ostream* plot);

/// Runs the validation suite and prints one line per check. True iff all pass.
bool cmd_check(std::ostream& out);
bool cmd_check(std::ostream& out, const Code41& code);

}  // namespace cli
}  // namespace esdlab

#endif  // ESDLAB_CLI_HPP
