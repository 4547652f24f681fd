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

#include "randcluster/commands.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "randcluster/errors.h"
#include "randcluster/results_io.h"
#include "randcluster/svg_chart.h"

namespace randcluster {

namespace fs = std::filesystem;

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

const char* colour(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput("not a number: '" + std::string(s) + "'");
  return v;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class OutputSink {
 public:
  OutputSink(const CommandOptions& opts, RunManifest& manifest)
      : dir_(opts.out_dir), format_(opts.format), manifest_(manifest) {
    fs::create_directories(dir_);
  }

  void table(const std::string& stem, const Table& t) {
    if (format_ == "json") {
      file(stem + ".json", to_json_text(t));
    } else {
      file(stem + ".csv", to_csv(t));
    }
  }

  void file(const std::string& name, const std::string& contents) {
    write_text_file((dir_ / name).string(), contents);
    manifest_.outputs[name] = sha256_hex(contents);
  }

 private:
  fs::path dir_;
  std::string format_;
  RunManifest& manifest_;
};

std::optional<MaxLocation> try_max(std::span<const CurvePoint> pts, int n_boot, std::uint64_t seed,
                                   std::string& status) {
  try {
    status = "ok";
    return locate_max(pts, n_boot, seed);
  } catch (const NoInteriorMax&) {
    status = "no_interior_max";
  } catch (const NumericError&) {
    status = "degenerate";
  } catch (const InvalidInput&) {
    status = "insufficient_points";
  }
  return std::nullopt;
}

ChartSeries curve_series(const std::string& name, std::span<const CurvePoint> pts, std::size_t c) {
  ChartSeries s;
  s.name = name;
  s.color = colour(c);
  for (const auto& p : pts) {
    s.x.push_back(p.q);
    s.y.push_back(p.mean);
    s.err.push_back(p.sem);
  }
  return s;
}

LineChart base_chart(const std::vector<double>& grid, std::string title, std::string y_label) {
  LineChart chart;
  chart.title = std::move(title);
  chart.y_label = std::move(y_label);
  if (grid.size() > 1) {
    chart.x_min = grid.front();
    chart.x_max = grid.back();
  } else {
    chart.x_min = std::max(0.0, grid.front() - 0.5);
    chart.x_max = chart.x_min + 1.0;
  }
  return chart;
}

void run_sweep_command(const CommandOptions& opts, OutputSink& sink) {
  SweepConfig cfg = make_sweep_config(opts);
  const auto aggs = run_sweep(cfg);
  sink.table("census", census_table(aggs, opts.n));

  const auto thresholds =
      compute_thresholds(aggs, opts.n, opts.level, opts.n_boot, opts.seed, opts.fit_family);
  const auto f2 = f2_curve(aggs);
  std::string f2_status;
  const auto f2_max = try_max(f2, opts.n_boot, opts.seed, f2_status);

  nlohmann::json j;
  j["n"] = opts.n;
  j["level"] = opts.level;
  j["fit_family"] = to_string(opts.fit_family);
  j["n_boot"] = opts.n_boot;
  j["thresholds"] = nlohmann::json::array();
  for (const auto& t : thresholds) j["thresholds"].push_back(threshold_to_json(t));
  j["max_f2"] = max_location_to_json(f2_max, f2_status);
  sink.file("thresholds.json", j.dump(2) + "\n");

  if (!opts.plot.empty()) {
    LineChart chart = base_chart(cfg.q_grid, "Mixed reductions, N = " + std::to_string(opts.n),
                                 "mixed reductions (%)");
    chart.y_min = 0.0;
    chart.y_max = 100.0;
    for (int m = 1; m <= opts.n / 2; ++m)
      chart.series.push_back(curve_series("m = " + std::to_string(m), mixedness_curve(aggs, m),
                                          static_cast<std::size_t>(m - 1)));
    chart.series.push_back(curve_series("F2", f2, static_cast<std::size_t>(opts.n / 2)));
    for (const auto& t : thresholds)
      if (t.status == "ok" && t.k <= opts.n / 2)
        chart.vertical.push_back({t.q_star, "T" + std::to_string(t.k)});
    sink.file(opts.plot, chart.render());
  }
}

void run_negativity_command(const CommandOptions& opts, OutputSink& sink) {
  SweepConfig cfg = make_sweep_config(opts);
  cfg.tasks.multipartite = true;
  const auto aggs = run_sweep(cfg);
  sink.table("census", census_table(aggs, opts.n));
  sink.table("negativity", negativity_table(aggs));

  nlohmann::json j;
  j["n"] = opts.n;
  j["root_mode"] = to_string(opts.root_mode);
  for (RootMode mode : {RootMode::kPaperN, RootMode::kBipartitionCount}) {
    std::string status;
    const auto pts = multipartite_curve(aggs, mode);
    const auto mx = try_max(pts, opts.n_boot, opts.seed, status);
    j["max_multipartite"][to_string(mode)] = max_location_to_json(mx, status);
  }
  sink.file("thresholds.json", j.dump(2) + "\n");

  if (!opts.plot.empty()) {
    LineChart chart =
        base_chart(cfg.q_grid, "Mean multipartite negativity, N = " + std::to_string(opts.n), "E_N");
    chart.y_min = 0.0;
    chart.series.push_back(
        curve_series("paper_n", multipartite_curve(aggs, RootMode::kPaperN), 0));
    chart.series.push_back(curve_series(
        "bipartition_count", multipartite_curve(aggs, RootMode::kBipartitionCount), 1));
    sink.file(opts.plot, chart.render());
  }
}

void run_average_state_command(const CommandOptions& opts, OutputSink& sink) {
  SweepConfig cfg = make_sweep_config(opts);
  cfg.tasks.average_state = true;
  const auto aggs = run_sweep(cfg);
  sink.table("average_state", average_state_table(aggs, opts.n, opts.root_mode));

  if (!opts.plot.empty()) {
    LineChart chart =
        base_chart(cfg.q_grid, "Average state, N = " + std::to_string(opts.n), "value");
    chart.log_y = true;
    ChartSeries purity{"purity", colour(0), {}, {}, {}, true};
    ChartSeries coherence{"coherence", colour(1), {}, {}, {}, true};
    ChartSeries en{"E_N (" + to_string(opts.root_mode) + ")", colour(2), {}, {}, {}, true};
    for (const auto& a : aggs) {
      const auto& s = *a.average_state;
      for (ChartSeries* c : {&purity, &coherence, &en}) c->x.push_back(a.q);
      purity.y.push_back(s.purity);
      coherence.y.push_back(s.coherence);
      en.y.push_back(opts.root_mode == RootMode::kPaperN ? s.multipartite_paper
                                                         : s.multipartite_bipartitions);
    }
    chart.series = {purity, coherence, en};
    sink.file(opts.plot, chart.render());
  }
}

void run_reductions_command(const CommandOptions& opts, OutputSink& sink) {
  SweepConfig cfg = make_sweep_config(opts);
  cfg.tasks.reductions = true;
  const auto aggs = run_sweep(cfg);
  sink.table("reductions", reductions_table(aggs, opts.n));

  if (!opts.plot.empty()) {
    LineChart chart =
        base_chart(cfg.q_grid, "Reduced-state negativity, N = " + std::to_string(opts.n), "E");
    chart.y_min = 0.0;
    const auto triplets = all_triplets(opts.n);
    for (std::size_t t = 0; t < triplets.size(); ++t) {
      std::string name = "E3";
      for (int l : triplets[t].labels()) name += "_" + std::to_string(l);
      ChartSeries s{name, colour(t), {}, {}, {}, false};
      for (const auto& a : aggs) {
        s.x.push_back(a.q);
        s.y.push_back(a.reductions->tripartite[t].mean);
        s.err.push_back(a.reductions->tripartite[t].sem);
      }
      chart.series.push_back(std::move(s));
    }
    ChartSeries b{"mean E2", "#000000", {}, {}, {}, true};
    for (const auto& a : aggs) {
      b.x.push_back(a.q);
      b.y.push_back(a.reductions->bipartite_mean.mean);
      b.err.push_back(a.reductions->bipartite_mean.sem);
    }
    chart.series.push_back(std::move(b));
    sink.file(opts.plot, chart.render());
  }
}

void run_percolation_command(const CommandOptions& opts, OutputSink& sink) {
  if (opts.pair.first == 0 && opts.pair.second == 0)
    throw InvalidInput("percolation requires --pair i,j");
  SweepConfig cfg = make_sweep_config(opts);
  cfg.tasks.percolation = true;
  const auto aggs = run_sweep(cfg);
  sink.table("percolation", percolation_table(aggs));

  if (!opts.plot.empty()) {
    LineChart chart = base_chart(cfg.q_grid,
                                 "Entangled pair (" + std::to_string(opts.pair.first) + "," +
                                     std::to_string(opts.pair.second) + "), N = " +
                                     std::to_string(opts.n),
                                 "entangled reductions (%)");
    chart.y_min = 0.0;
    ChartSeries s{"pair", colour(0), {}, {}, {}, true};
    for (const auto& a : aggs) {
      s.x.push_back(a.q);
      s.y.push_back(a.percolation_pct->mean);
      s.err.push_back(a.percolation_pct->sem);
    }
    chart.series.push_back(std::move(s));
    sink.file(opts.plot, chart.render());
  }
}

void run_sample_command(const CommandOptions& opts, std::ostream& out) {
  SweepConfig cfg = make_sweep_config(opts);
  if (opts.q_index >= cfg.q_grid.size())
    throw InvalidInput("--q-index out of range for the q grid");
  const GraphInstance g = sample_instance(cfg, opts.q_index, opts.sample_index);
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(graph_to_json(g));
  j["q"] = cfg.q_grid[opts.q_index];
  j["q_index"] = opts.q_index;
  j["sample_index"] = opts.sample_index;
  j["seed"] = opts.seed;
  j["digest"] = g.digest();
  if (opts.amplitudes) {
    const StateVector psi = build_state(g);
    nlohmann::json amps = nlohmann::json::array();
    for (const Complex& a : psi.amplitudes()) amps.push_back({a.real(), a.imag()});
    j["amplitudes"] = amps;
  }
  out << j.dump(2) << "\n";
}

}  // namespace

std::vector<double> parse_q_grid(const std::string& spec) {
  if (spec.empty()) throw InvalidInput("empty q grid");
  if (spec.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(parse_double(item));
    if (parts.size() != 3) throw InvalidInput("q grid must be start:stop:step");
    return make_grid(parts[0], parts[1], parts[2]);
  }
  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_double(item));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > 1.0) throw InvalidInput("q values must lie in [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidInput("q values must be ascending");
  }
  return grid;
}

std::pair<int, int> parse_pair(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw InvalidInput("pair must be i,j");
  const double a = parse_double(std::string_view(spec).substr(0, comma));
  const double b = parse_double(std::string_view(spec).substr(comma + 1));
  if (a != std::floor(a) || b != std::floor(b)) throw InvalidInput("pair labels must be integers");
  return {static_cast<int>(a), static_cast<int>(b)};
}

SweepConfig make_sweep_config(const CommandOptions& opts) {
  if (opts.format != "csv" && opts.format != "json")
    throw InvalidInput("--format must be csv or json");
  if (opts.n_boot < 1) throw InvalidInput("--n-boot must be positive");
  if (!(opts.level > 0.0 && opts.level < 100.0)) throw InvalidInput("--level must lie in (0, 100)");
  SweepConfig cfg;
  cfg.n = opts.n;
  cfg.q_grid = parse_q_grid(opts.q_spec);
  cfg.samples = opts.samples;
  cfg.master_seed = opts.seed;
  cfg.purity_tol = opts.purity_tol;
  cfg.root_mode = opts.root_mode;
  cfg.workers = opts.threads;
  if (opts.pair.first != 0 || opts.pair.second != 0) cfg.percolation_pair = opts.pair;
  cfg.validate();
  return cfg;
}

RunManifest run_command(const CommandOptions& opts, std::ostream& out) {
  RunManifest manifest;
  manifest.options = opts;
  manifest.tool_version = tool_version();
  manifest.timestamp = utc_timestamp();
  manifest.csv_schema_version = kCsvSchemaVersion;

  if (opts.command == "sample") {
    run_sample_command(opts, out);
    return manifest;
  }
  if (!opts.plot.empty() && fs::path(opts.plot).has_parent_path())
    throw InvalidInput("--plot takes a file name inside --out");

  OutputSink sink(opts, manifest);
  if (opts.command == "sweep") {
    run_sweep_command(opts, sink);
  } else if (opts.command == "negativity") {
    run_negativity_command(opts, sink);
  } else if (opts.command == "average-state") {
    run_average_state_command(opts, sink);
  } else if (opts.command == "reductions") {
    run_reductions_command(opts, sink);
  } else if (opts.command == "percolation") {
    run_percolation_command(opts, sink);
  } else {
    throw InvalidInput("unknown command '" + opts.command + "'");
  }
  write_text_file((fs::path(opts.out_dir) / "manifest.json").string(),
                  manifest_to_json(manifest).dump(2) + "\n");
  return manifest;
}

namespace {

struct RawFlags {
  std::string pair;
  std::string root_mode = "paper";
  std::string fit_family = to_string(kDefaultFitFamily);
};

void add_common(CLI::App* sub, CommandOptions& o, RawFlags& raw) {
  sub->add_option("--n", o.n, "Number of qubits")->capture_default_str();
  sub->add_option("--q", o.q_spec, "q grid: start:stop:step or comma list")->capture_default_str();
  sub->add_option("--samples", o.samples, "Samples per q point")->capture_default_str();
  sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sub->add_option("--purity-tol", o.purity_tol, "Mixedness tolerance on 1 - purity")
      ->capture_default_str();
  sub->add_option("--root-mode", raw.root_mode, "paper | bipartitions")->capture_default_str();
}

void add_outputs(CLI::App* sub, CommandOptions& o, RawFlags& raw) {
  sub->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
  sub->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--plot", o.plot, "Write an SVG chart with this file name into --out");
  sub->add_option("--fit-family", raw.fit_family, "monotone | logistic")->capture_default_str();
  sub->add_option("--n-boot", o.n_boot, "Bootstrap refits")->capture_default_str();
  sub->add_option("--level", o.level, "Threshold level in percent")->capture_default_str();
}

int verify_replay(const std::string& manifest_path, const std::string& out_dir, std::ostream& out,
                  std::ostream& err) {
  const RunManifest original = manifest_from_json(nlohmann::json::parse(
      read_text_file(manifest_path), nullptr, /*allow_exceptions=*/false));
  CommandOptions opts = original.options;
  opts.out_dir = out_dir;
  std::ostringstream sink;
  const RunManifest rerun = run_command(opts, sink);
  int mismatches = 0;
  for (const auto& [name, digest] : original.outputs) {
    const auto it = rerun.outputs.find(name);
    const bool same = it != rerun.outputs.end() && it->second == digest;
    out << (same ? "match    " : "MISMATCH ") << name << "\n";
    if (!same) ++mismatches;
  }
  if (mismatches > 0) {
    err << "replay: " << mismatches << " output(s) differ\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement statistics of random graph states", "randcluster"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CommandOptions opts;
  RawFlags raw;
  std::string manifest_path;
  std::string replay_out;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"sweep", "Mixed-reduction census and thresholds"},
      {"negativity", "Mean multipartite negativity"},
      {"average-state", "Purity, coherence and negativity of the sample-averaged state"},
      {"reductions", "Negativity of three- and two-qubit reductions"},
      {"percolation", "Entanglement of a fixed qubit pair"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, opts, raw);
    add_outputs(sub, opts, raw);
    auto* pair = sub->add_option("--pair", raw.pair, "Qubit pair i,j");
    if (std::string(s.name) == "percolation") pair->required();
  }
  auto* sample = app.add_subcommand("sample", "Print one sampled graph as JSON");
  add_common(sample, opts, raw);
  sample->add_option("--index", opts.sample_index, "Sample index")->capture_default_str();
  sample->add_option("--q-index", opts.q_index, "Index into the q grid")->capture_default_str();
  sample->add_flag("--amplitudes", opts.amplitudes, "Include state amplitudes");
  auto* replay = app.add_subcommand("replay", "Rerun a manifest and compare output digests");
  replay->add_option("--manifest", manifest_path, "manifest.json to replay")->required();
  replay->add_option("--out", replay_out, "Directory for the rerun outputs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (replay->parsed()) return verify_replay(manifest_path, replay_out, out, err);
    opts.command = app.get_subcommands().front()->get_name();
    opts.root_mode = root_mode_from_string(raw.root_mode);
    opts.fit_family = fit_family_from_string(raw.fit_family);
    if (!raw.pair.empty()) opts.pair = parse_pair(raw.pair);
    run_command(opts, out);
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace randcluster
