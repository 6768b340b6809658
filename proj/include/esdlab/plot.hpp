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

#ifndef ESDLAB_PLOT_HPP
#define ESDLAB_PLOT_HPP

#include <ostream>
#include <string>

#include "esdlab/cli.hpp"

namespace esdlab::plot {

/// SVG line chart of every column of `table` against its first column, on
/// the unit square.
void write_svg(std::ostream& out, const cli::Table& table, const std::string& title,
               const std::string& x_label, const std::string& y_label);

}  // namespace esdlab::plot

#endif  // ESDLAB_PLOT_HPP
