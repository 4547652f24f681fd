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

#include "randcluster/results_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "randcluster/errors.h"

namespace randcluster {

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw InvalidInput("table has no column '" + name + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

double parse_number(const std::string& field) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    throw InvalidInput("cannot parse number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("parse_csv: empty input");
  t.columns = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != t.columns.size()) throw InvalidInput("parse_csv: ragged row");
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_number(f));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_json_text(const Table& table) {
  // Numbers go through format_number so CSV and JSON carry identical digits.
  std::string out = "{\"columns\":";
  out += nlohmann::json(table.columns).dump();
  out += ",\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      if (c) out += ',';
      const double v = table.rows[r][c];
      out += std::isnan(v) ? "null" : format_number(v);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Table parse_json_table(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      std::vector<double> values;
      for (const auto& v : row)
        values.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
      if (values.size() != t.columns.size()) throw InvalidInput("parse_json_table: ragged row");
      t.rows.push_back(std::move(values));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("parse_json_table: ") + e.what());
  }
}

Table census_table(const std::vector<QPointAggregate>& aggregates, int n) {
  Table t;
  t.columns.push_back("q");
  for (int m = 1; m < n; ++m) {
    t.columns.push_back("mixed_" + std::to_string(m) + "_pct");
    t.columns.push_back("mixed_" + std::to_string(m) + "_se");
  }
  t.columns.push_back("f2_pct");
  t.columns.push_back("f2_se");
  for (const auto& a : aggregates) {
    std::vector<double> row = {a.q};
    for (int m = 1; m < n; ++m) {
      row.push_back(a.mixed_pct.at(static_cast<std::size_t>(m)).mean);
      row.push_back(a.mixed_pct.at(static_cast<std::size_t>(m)).sem);
    }
    row.push_back(a.f2_pct.mean);
    row.push_back(a.f2_pct.sem);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<QPointAggregate> census_from_table(const Table& table, int n) {
  std::vector<QPointAggregate> out;
  const std::size_t qc = table.column("q");
  for (const auto& row : table.rows) {
    QPointAggregate a;
    a.q = row[qc];
    a.mixed_pct.assign(static_cast<std::size_t>(n), MeanStat{});
    for (int m = 1; m < n; ++m) {
      const std::string base = "mixed_" + std::to_string(m);
      a.mixed_pct[static_cast<std::size_t>(m)].mean = row[table.column(base + "_pct")];
      a.mixed_pct[static_cast<std::size_t>(m)].sem = row[table.column(base + "_se")];
    }
    a.f2_pct.mean = row[table.column("f2_pct")];
    a.f2_pct.sem = row[table.column("f2_se")];
    out.push_back(std::move(a));
  }
  return out;
}

Table negativity_table(const std::vector<QPointAggregate>& aggregates) {
  Table t;
  t.columns = {"q",          "en_paper_mean", "en_paper_sd",      "en_paper_se",
               "en_bip_mean", "en_bip_sd",     "en_bip_se"};
  for (const auto& a : aggregates) {
    const auto& p = a.multipartite_paper;
    const auto& b = a.multipartite_bipartitions;
    t.rows.push_back({a.q, p.mean, p.stddev, p.sem, b.mean, b.stddev, b.sem});
  }
  return t;
}

Table average_state_table(const std::vector<QPointAggregate>& aggregates, int n, RootMode mode) {
  Table t;
  t.columns = {"q", "purity", "coherence", "en", "en_paper", "en_bip"};
  for (int m = 1; m <= n / 2; ++m) t.columns.push_back("neg_split_" + std::to_string(m));
  for (const auto& a : aggregates) {
    const auto& s = a.average_state.value();
    const double en = mode == RootMode::kPaperN ? s.multipartite_paper : s.multipartite_bipartitions;
    std::vector<double> row = {a.q, s.purity, s.coherence, en, s.multipartite_paper,
                               s.multipartite_bipartitions};
    for (int m = 1; m <= n / 2; ++m) row.push_back(s.mean_by_split_size.at(static_cast<std::size_t>(m)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table reductions_table(const std::vector<QPointAggregate>& aggregates, int n) {
  Table t;
  t.columns = {"q"};
  for (const auto& trip : all_triplets(n)) {
    std::string name = "tri";
    for (int label : trip.labels()) name += "_" + std::to_string(label);
    t.columns.push_back(name);
  }
  t.columns.push_back("bip_mean");
  t.columns.push_back("bip_sd");
  for (const auto& a : aggregates) {
    const auto& r = a.reductions.value();
    std::vector<double> row = {a.q};
    for (const auto& s : r.tripartite) row.push_back(s.mean);
    row.push_back(r.bipartite_mean.mean);
    row.push_back(r.bipartite_mean.stddev);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table percolation_table(const std::vector<QPointAggregate>& aggregates) {
  Table t;
  t.columns = {"q", "pct", "se"};
  for (const auto& a : aggregates) {
    const auto& p = a.percolation_pct.value();
    t.rows.push_back({a.q, p.mean, p.sem});
  }
  return t;
}

nlohmann::json threshold_to_json(const ThresholdResult& t) {
  nlohmann::json j;
  j["k"] = t.k;
  j["status"] = t.status;
  j["dropped"] = t.dropped;
  if (t.status == "ok") {
    j["q_star"] = t.q_star;
    j["uncertainty"] = t.uncertainty;
  } else {
    j["q_star"] = nullptr;
    j["uncertainty"] = nullptr;
  }
  return j;
}

ThresholdResult threshold_from_json(const nlohmann::json& j) {
  ThresholdResult t;
  t.k = j.at("k").get<int>();
  t.status = j.at("status").get<std::string>();
  t.dropped = j.at("dropped").get<int>();
  t.q_star = j.at("q_star").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                      : j.at("q_star").get<double>();
  t.uncertainty = j.at("uncertainty").is_null() ? 0.0 : j.at("uncertainty").get<double>();
  return t;
}

nlohmann::json max_location_to_json(const std::optional<MaxLocation>& m, const std::string& status) {
  nlohmann::json j;
  j["status"] = status;
  if (m) {
    j["q"] = m->q;
    j["uncertainty"] = m->uncertainty;
    j["value"] = m->value;
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace randcluster
