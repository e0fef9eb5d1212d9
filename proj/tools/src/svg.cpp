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


#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bvrelax::tools {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Axis {
  bool log;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0); }
  double t(double v) const { return log ? std::log10(v) : v; }
  void add(double v) {
    if (!usable(v)) return;
    lo = std::min(lo, t(v));
    hi = std::max(hi, t(v));
  }
  void finish() {
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  // Fraction in [0,1] along the axis.
  double frac(double v) const { return (t(v) - lo) / (hi - lo); }
  double inverse(double f) const {
    double s = lo + f * (hi - lo);
    return log ? std::pow(10.0, s) : s;
  }
};

}  // namespace

std::string line_plot(const PlotSpec& spec, const std::vector<Series>& series) {
  Axis ax{spec.log_x}, ay{spec.log_y};
  for (const auto& s : series) {
    for (size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
      if (ax.usable(s.x[k]) && ay.usable(s.y[k])) {
        ax.add(s.x[k]);
        ay.add(s.y[k]);
      }
    }
  }
  ax.finish();
  ay.finish();
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + ax.frac(v) * pw; };
  auto py = [&](double v) { return kTop + (1.0 - ay.frac(v)) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
    << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
    << escape(spec.title) << "</text>\n";
  o << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw)
    << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    double f = k / 4.0;
    double gx = kLeft + f * pw, gy = kTop + (1.0 - f) * ph;
    o << "<line x1=\"" << num(gx) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(gx)
      << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << num(gx) << "\" y=\"" << num(kTop + ph + 18)
      << "\" text-anchor=\"middle\">" << label(ax.inverse(f)) << "</text>\n";
    o << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(gy) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(gy) << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(gy + 4)
      << "\" text-anchor=\"end\">" << label(ay.inverse(f)) << "</text>\n";
  }
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10)
    << "\" text-anchor=\"middle\">" << escape(spec.x_label) << (spec.log_x ? " (log)" : "")
    << "</text>\n";
  o << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << num(kTop + ph / 2) << ")\">" << escape(spec.y_label) << (spec.log_y ? " (log)" : "")
    << "</text>\n";
  for (size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % 5];
    std::ostringstream pts;
    for (size_t k = 0; k < series[s].x.size() && k < series[s].y.size(); ++k) {
      double x = series[s].x[k], y = series[s].y[k];
      if (!ax.usable(x) || !ay.usable(y)) continue;
      pts << num(px(x)) << ',' << num(py(y)) << ' ';
      o << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\""
        << color << "\"/>\n";
    }
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"" << pts.str() << "\"/>\n";
    o << "<text x=\"" << num(kLeft + 10) << "\" y=\"" << num(kTop + 16 + 14 * s) << "\" fill=\""
      << color << "\">" << escape(series[s].name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace bvrelax::tools
