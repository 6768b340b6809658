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

#include "esdlab/plot.hpp"

#include <array>
#include <cstdio>
#include <string_view>

namespace esdlab::plot {

namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 70, kRight = 200, kTop = 40, kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<std::string_view, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                                  "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::array<std::string_view, 6> kDashes{"", "8,4", "2,3", "8,3,2,3", "8,3,2,3,2,3", "12,4"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

double px(double x) { return kLeft + x * kPlotW; }
double py(double y) { return kTop + (1.0 - y) * kPlotH; }

}  // namespace

void write_svg(std::ostream& out, const cli::Table& table, const std::string& title,
               const std::string& x_label, const std::string& y_label) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n"
      << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(kPlotW)
      << "\" height=\"" << num(kPlotH) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double t = i / 5.0;
    out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(py(0) + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(px(t)) << "\" y=\"" << num(py(0) + 18)
        << "\" text-anchor=\"middle\">" << num(t).substr(0, 3) << "</text>\n"
        << "<line x1=\"" << num(px(0) - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(px(0))
        << "\" y2=\"" << num(py(t)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(t) + 4)
        << "\" text-anchor=\"end\">" << num(t).substr(0, 3) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + kPlotW / 2) << "\" y=\"" << num(kHeight - 20)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(x_label) << "</text>\n"
      << "<text x=\"20\" y=\"" << num(kTop + kPlotH / 2)
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
      << num(kTop + kPlotH / 2) << ")\">" << escape(y_label) << "</text>\n";

  for (std::size_t c = 1; c < table.header.size(); ++c) {
    const auto color = kColors[(c - 1) % kColors.size()];
    const auto dash = kDashes[(c - 1) % kDashes.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      if (!row[0] || !row[c]) continue;
      out << (first ? "" : " ") << num(px(*row[0])) << ',' << num(py(*row[c]));
      first = false;
    }
    out << "\"/>\n";

    const double ly = kTop + 14 + 20 * static_cast<double>(c - 1);
    const double lx = kLeft + kPlotW + 12;
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 30)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (!dash.empty()) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n<text x=\"" << num(lx + 36) << "\" y=\"" << num(ly + 4) << "\">"
        << escape(table.header[c]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace esdlab::plot
