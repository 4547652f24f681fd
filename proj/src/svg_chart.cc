// Copyright 2026 The randcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randcluster/svg_chart.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "randcluster/results_io.h"

namespace randcluster {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_number(std::round(v * 100.0) / 100.0); }

// Round step for about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10 * mag;
}

}  // namespace

std::string LineChart::render() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      const double e = i < s.err.size() ? s.err[i] : 0.0;
      double a = s.y[i] - e, b = s.y[i] + e;
      if (log_y) {
        a = s.y[i] - e > 0 ? s.y[i] - e : s.y[i];
        if (!(s.y[i] > 0)) continue;
      }
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  if (!std::isfinite(lo)) lo = log_y ? 1e-3 : 0.0, hi = 1.0;
  if (y_min) lo = *y_min;
  if (y_max) hi = *y_max;
  for (const auto& h : horizontal) lo = std::min(lo, h.position), hi = std::max(hi, h.position);
  if (log_y) {
    lo = std::pow(10.0, std::floor(std::log10(lo)));
    hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (hi <= lo) hi = lo * 10;
  } else if (hi - lo < 1e-12) {
    hi = lo + 1.0;
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * pw; };
  auto sy = [&](double y) {
    const double t = log_y ? (std::log10(y) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                           : (y - lo) / (hi - lo);
    return kTop + (1.0 - t) * ph;
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(title) << "</text>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  // x ticks
  const double xs = nice_step(x_max - x_min, 5);
  for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-9; x += xs) {
    o << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << num(sx(x))
      << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>"
      << "<text x=\"" << num(sx(x)) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
      << format_number(std::round(x * 1e6) / 1e6) << "</text>\n";
  }
  // y ticks
  if (log_y) {
    for (double y = lo; y <= hi * 1.0001; y *= 10) {
      o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << num(sy(y)) << "\" stroke=\"black\"/>"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">"
        << format_number(y) << "</text>\n";
    }
  } else {
    const double ys = nice_step(hi - lo, 5);
    for (double y = std::ceil(lo / ys) * ys; y <= hi + 1e-9 * ys; y += ys) {
      o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << num(sy(y)) << "\" stroke=\"black\"/>"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">"
        << format_number(std::round(y * 1e6) / 1e6) << "</text>\n";
    }
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
    << escape(x_label) << "</text>\n";
  o << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(y_label) << "</text>\n";

  for (const auto& v : vertical) {
    if (!std::isfinite(v.position)) continue;
    const std::string x = num(sx(v.position));
    o << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\"" << kTop + ph
      << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>"
      << "<text x=\"" << x << "\" y=\"" << kTop + 12 << "\" transform=\"rotate(-90 " << x << ' '
      << kTop + 12 << ")\" text-anchor=\"end\" font-size=\"11\">" << escape(v.label) << "</text>\n";
  }
  for (const auto& h : horizontal) {
    const std::string y = num(sy(h.position));
    o << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + pw << "\" y2=\"" << y
      << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>"
      << "<text x=\"" << kLeft + pw - 4 << "\" y=\"" << num(sy(h.position) - 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << escape(h.label) << "</text>\n";
  }

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    std::string path;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (log_y && !(s.y[i] > 0)) continue;
      path += (path.empty() ? "" : " ") + num(sx(s.x[i])) + "," + num(sy(s.y[i]));
    }
    o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"" << path
      << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (log_y && !(s.y[i] > 0)) continue;
      const double cx = sx(s.x[i]);
      if (i < s.err.size() && s.err[i] > 0) {
        double top = s.y[i] + s.err[i], bottom = s.y[i] - s.err[i];
        if (log_y && bottom <= 0) bottom = s.y[i];
        top = std::min(top, hi);
        bottom = std::max(bottom, lo);
        o << "<path d=\"M" << num(cx) << ' ' << num(sy(top)) << " V" << num(sy(bottom)) << " M"
          << num(cx - 3) << ' ' << num(sy(top)) << " H" << num(cx + 3) << " M" << num(cx - 3) << ' '
          << num(sy(bottom)) << " H" << num(cx + 3) << "\" stroke=\"" << s.color << "\"/>\n";
      }
      if (s.markers) {
        o << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(sy(s.y[i])) << "\" r=\"2.5\" fill=\""
          << s.color << "\"/>\n";
      }
    }
    const double ly = kTop + 16 + 16 * static_cast<double>(si);
    o << "<line x1=\"" << kLeft + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kLeft + 30 << "\" y2=\""
      << ly - 4 << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>"
      << "<text x=\"" << kLeft + 36 << "\" y=\"" << ly << "\">" << escape(s.name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace randcluster
