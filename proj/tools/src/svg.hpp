// Copyright 2026 The bvrelax Authors
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


#ifndef BVRELAX_TOOLS_SVG_HPP_
#define BVRELAX_TOOLS_SVG_HPP_

#include <string>
#include <vector>

namespace bvrelax::tools {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = true;
  bool log_y = false;
};

// Polyline plot; nonpositive values are dropped from log axes.
std::string line_plot(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace bvrelax::tools

#endif  // BVRELAX_TOOLS_SVG_HPP_
