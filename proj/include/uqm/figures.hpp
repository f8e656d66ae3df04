// Copyright 2026 <project authors>
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

#ifndef UQM_FIGURES_HPP
#define UQM_FIGURES_HPP

#include <optional>
#include <string>
#include <vector>

namespace uqm {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
  std::vector<double> points() const;
};
// "lo:hi:step"
Range parse_range(const std::string& text);

struct FigureOptions {
  std::optional<Range> range;
  std::vector<int> rounds;  // recovery figures
  double gamma = 1.0;       // detector efficiency, experimental figures
};

struct Table {
  std::vector<std::string> columns;  // "name [unit]"
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> figure_ids();
Table figure_table(const std::string& id, const FigureOptions& opt = {});
// 12 significant digits, ',' separated, LF line endings.
std::string to_csv(const Table& t);

}  // namespace uqm

#endif  // UQM_FIGURES_HPP
