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

#ifndef RANDCLUSTER_SVG_CHART_H
#define RANDCLUSTER_SVG_CHART_H

#include <optional>
#include <string>
#include <vector>

namespace randcluster {

struct ChartSeries {
  std::string name;
  std::string color = "#1f77b4";
  std::vector<double> x;
  std::vector<double> y;
  /// Symmetric error bars; empty for none.
  std::vector<double> err;
  bool markers = true;
};

struct ChartLine {
  double position = 0.0;
  std::string label;
};

/// Single-file SVG line chart with error bars and dashed reference lines.
struct LineChart {
  std::string title;
  std::string x_label = "q";
  std::string y_label;
  bool log_y = false;
  double x_min = 0.0;
  double x_max = 1.0;
  std::optional<double> y_min;
  std::optional<double> y_max;
  std::vector<ChartSeries> series;
  std::vector<ChartLine> vertical;
  std::vector<ChartLine> horizontal;

  std::string render() const;
};

}  // namespace randcluster

#endif  // RANDCLUSTER_SVG_CHART_H
