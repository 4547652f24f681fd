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

#ifndef RANDCLUSTER_RESULTS_IO_H
#define RANDCLUSTER_RESULTS_IO_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "randcluster/analysis.h"
#include "randcluster/mc_engine.h"

namespace randcluster {

/// Bumped whenever a column is added, removed or renamed.
inline constexpr int kCsvSchemaVersion = 1;

/// Numeric table behind every CSV/JSON result file.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
  friend bool operator==(const Table&, const Table&) = default;
};

/// 12 significant digits, dot decimal separator regardless of locale; "nan" for NaN.
std::string format_number(double v);

std::string to_csv(const Table& table);
Table parse_csv(const std::string& text);
/// {"columns": [...], "rows": [[...], ...]}, numbers formatted as in CSV.
std::string to_json_text(const Table& table);
Table parse_json_table(const std::string& text);

Table census_table(const std::vector<QPointAggregate>& aggregates, int n);
/// Rebuilds the census part of the aggregates from a census table.
std::vector<QPointAggregate> census_from_table(const Table& table, int n);
Table negativity_table(const std::vector<QPointAggregate>& aggregates);
Table average_state_table(const std::vector<QPointAggregate>& aggregates, int n, RootMode mode);
Table reductions_table(const std::vector<QPointAggregate>& aggregates, int n);
Table percolation_table(const std::vector<QPointAggregate>& aggregates);

nlohmann::json threshold_to_json(const ThresholdResult& t);
ThresholdResult threshold_from_json(const nlohmann::json& j);
nlohmann::json max_location_to_json(const std::optional<MaxLocation>& m, const std::string& status);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace randcluster

#endif  // RANDCLUSTER_RESULTS_IO_H
