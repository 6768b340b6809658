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

#include "esdlab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "esdlab/checks.hpp"
#include "esdlab/plot.hpp"

namespace esdlab::cli {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("cannot parse angle '" + std::string(whole) + "'");
  }
  return value;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("NONE");
}

}  // namespace

std::optional<CodeSelection> parse_code(std::string_view name) {
  if (name == "none") return CodeSelection::None;
  if (name == "c41") return CodeSelection::C41;
  if (name == "both") return CodeSelection::Both;
  return std::nullopt;
}

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(text, whole);

  std::string_view coefficient = text.substr(0, pi_at);
  std::string_view rest = text.substr(pi_at + 2);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.remove_suffix(1);
  double scale = 1.0;
  if (coefficient == "-") {
    scale = -1.0;
  } else if (coefficient == "+") {
    scale = 1.0;
  } else if (!coefficient.empty()) {
    scale = parse_number(coefficient, whole);
  }
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError("cannot parse angle '" + std::string(whole) + "'");
    const double denominator = parse_number(rest.substr(1), whole);
    if (denominator == 0.0) throw UsageError("angle '" + std::string(whole) + "' divides by zero");
    scale /= denominator;
  }
  return scale * std::numbers::pi;
}

void RunConfig::validate() const {
  auto in_unit = [](double g) { return g >= 0.0 && g <= 1.0; };
  if (!in_unit(gamma_min) || !in_unit(gamma_max)) {
    throw UsageError("gamma range must lie in [0, 1]");
  }
  if (gamma_min > gamma_max) throw UsageError("--gamma-min exceeds --gamma-max");
  if (steps < 2) throw UsageError("--steps must be at least 2");
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta)) {
    throw UsageError("angles must be finite");
  }
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << (row[c] ? format_number(*row[c]) : std::string("NA"));
    }
    out << '\n';
  }
}

Table sweep_table(const std::vector<SimResult>& results) {
  Table t;
  t.header = {"gamma", "fidelity_uncoded", "concurrence_uncoded", "fidelity_coded",
              "concurrence_coded"};
  for (const auto& r : results) {
    std::vector<std::optional<double>> row{r.gamma};
    for (const auto& m : {r.uncoded, r.coded}) {
      row.push_back(m ? std::optional(m->fidelity) : std::nullopt);
      row.push_back(m ? std::optional(m->concurrence) : std::nullopt);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_sweep(const RunConfig& config, std::ostream& csv) {
  config.validate();
  const SweepPaths paths{config.code != CodeSelection::C41, config.code != CodeSelection::None};
  const auto grid = gamma_grid(config.gamma_min, config.gamma_max, config.steps);
  Table t = sweep_table(sweep(config.spec, grid, paths));
  write_csv(csv, t);
  return t;
}

EsdReport cmd_threshold(const RunConfig& config, std::ostream& out) {
  config.validate();
  const StateFamily spec = config.spec;
  const bool uncoded = config.code != CodeSelection::C41;
  const bool coded = config.code != CodeSelection::None;

  EsdReport report{spec, std::nullopt, std::nullopt, std::nullopt};
  if (uncoded && coded) {
    report = esd_report(spec);
  } else if (uncoded) {
    report.gamma_star_uncoded =
        esd_threshold([&](double g) { return run_uncoded(spec, g).concurrence; });
  } else {
    report.gamma_star_coded = esd_threshold([&](double g) { return run_coded(spec, g).concurrence; });
  }

  out << "family=" << to_string(spec.family) << '\n';
  out << "alpha=" << format_number(spec.alpha) << '\n';
  out << "beta=" << format_number(spec.beta) << '\n';
  out << "gamma_star_uncoded=" << (uncoded ? optional_number(report.gamma_star_uncoded) : "NA")
      << '\n';
  out << "gamma_star_coded=" << (coded ? optional_number(report.gamma_star_coded) : "NA") << '\n';
  out << "crossover_gamma="
      << (uncoded && coded ? optional_number(report.crossover_gamma) : "NA") << '\n';
  return report;
}

FigureSpec figure_spec(std::string_view id) {
  const double pi = std::numbers::pi;
  if (id == "1a") return {"1a", "recovered and uncoded fidelities, α = π/12", "ℱ", pi / 12};
  if (id == "1b") return {"1b", "recovered and uncoded fidelities, α = π/4", "ℱ", pi / 4};
  if (id == "2a") return {"2a", "φ fidelity and concurrence, α = π/12", "ℱ, 𝒞", pi / 12};
  if (id == "2b") return {"2b", "φ fidelity and concurrence, α = π/4", "ℱ, 𝒞", pi / 4};
  if (id == "3a") return {"3a", "ψ fidelity and concurrence, α = π/12", "ℱ, 𝒞", pi / 12};
  if (id == "3b") return {"3b", "ψ fidelity and concurrence, α = π/4", "ℱ, 𝒞", pi / 4};
  throw UsageError("unknown figure '" + std::string(id) + "' (expected 1a 1b 2a 2b 3a 3b)");
}

Table figure_table(std::string_view id) {
  const FigureSpec fig = figure_spec(id);
  const auto grid = gamma_grid(0.0, 1.0, kDefaultGridPoints);

  if (fig.id[0] == '2' || fig.id[0] == '3') {
    const Family family = fig.id[0] == '2' ? Family::Phi : Family::Psi;
    return sweep_table(sweep({family, fig.alpha, 0.0}, grid));
  }

  // Fidelity panel: coded phi, psi, varphi, then uncoded phi, psi.
  const auto phi = sweep({Family::Phi, fig.alpha, 0.0}, grid);
  const auto psi = sweep({Family::Psi, fig.alpha, 0.0}, grid);
  const auto varphi = sweep({Family::Varphi, fig.alpha, 0.0}, grid, {false, true});
  Table t;
  t.header = {"gamma",        "fidelity_coded_phi",   "fidelity_coded_psi",
              "fidelity_coded_varphi", "fidelity_uncoded_phi", "fidelity_uncoded_psi"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.rows.push_back({grid[i], phi[i].coded->fidelity, psi[i].coded->fidelity,
                      varphi[i].coded->fidelity, phi[i].uncoded->fidelity,
                      psi[i].uncoded->fidelity});
  }
  return t;
}

Table cmd_figure(std::string_view id, std::ostream& csv, std::ostream* plot) {
  const FigureSpec fig = figure_spec(id);
  Table t = figure_table(id);
  write_csv(csv, t);
  if (plot) plot::write_svg(*plot, t, "Panel " + fig.id + ": " + fig.title, "γ", fig.y_label);
  return t;
}

bool cmd_check(std::ostream& out) { return cmd_check(out, Code41::standard()); }

bool cmd_check(std::ostream& out, const Code41& code) {
  const auto outcomes = run_checks(code);
  std::size_t failed = 0;
  for (const auto& c : outcomes) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << format_number(c.measured) << ' '
        << c.criterion << '\n';
    if (!c.passed) ++failed;
  }
  out << (failed ? "checks failed: " : "all checks passed: ") << (outcomes.size() - failed) << '/'
      << outcomes.size() << '\n';
  if (failed) {
    out << "failures:";
    for (const auto& c : outcomes) {
      if (!c.passed) out << ' ' << c.name;
    }
    out << '\n';
  }
  return failed == 0;
}

}  // namespace esdlab::cli
