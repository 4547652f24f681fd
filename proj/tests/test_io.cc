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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "randcluster/commands.h"
#include "randcluster/errors.h"
#include "randcluster/results_io.h"
#include "randcluster/svg_chart.h"

namespace randcluster {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("randcluster_test_" + name);
  fs::remove_all(dir);
  return dir;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "randcluster");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

std::vector<QPointAggregate> small_sweep(bool all_tasks) {
  SweepConfig cfg;
  cfg.n = 4;
  cfg.q_grid = make_grid(0, 1, 0.25);
  cfg.samples = 60;
  cfg.master_seed = 5;
  cfg.tasks.multipartite = all_tasks;
  cfg.tasks.average_state = all_tasks;
  cfg.tasks.reductions = all_tasks;
  cfg.tasks.percolation = all_tasks;
  return run_sweep(cfg);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(100.0), "100");
  EXPECT_EQ(format_number(1.5e-7), "1.5e-07");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Csv, RoundTrip) {
  const Table t{{"q", "a", "b"}, {{0, 1.0 / 3, -2.5e-9}, {0.5, 100, std::nan("")}}};
  const std::string text = to_csv(t);
  EXPECT_EQ(text.substr(0, 6), "q,a,b\n");
  const Table back = parse_csv(text);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_NEAR(back.rows[0][1], 1.0 / 3, 1e-12);
  EXPECT_TRUE(std::isnan(back.rows[1][2]));
  EXPECT_EQ(to_csv(back), text);
  EXPECT_THROW(parse_csv("a,b\n1\n"), InvalidInput);
  EXPECT_THROW(parse_csv("a\nx\n"), InvalidInput);
}

TEST(JsonTable, RoundTrip) {
  const Table t{{"q", "v"}, {{0.1, 2.0 / 7}, {0.2, std::nan("")}}};
  const std::string text = to_json_text(t);
  const Table back = parse_json_table(text);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_NEAR(back.rows[0][1], 2.0 / 7, 1e-12);
  EXPECT_TRUE(std::isnan(back.rows[1][1]));
  EXPECT_EQ(to_json_text(back), text);
  EXPECT_THROW(parse_json_table("{}"), InvalidInput);
}

TEST(CensusTable, RoundTripsIntoAggregates) {
  const auto aggs = small_sweep(false);
  const Table t = census_table(aggs, 4);
  EXPECT_EQ(t.columns.size(), 9u);
  const auto back = census_from_table(parse_csv(to_csv(t)), 4);
  ASSERT_EQ(back.size(), aggs.size());
  for (std::size_t i = 0; i < aggs.size(); ++i) {
    EXPECT_EQ(back[i].q, aggs[i].q);
    for (int m = 1; m < 4; ++m) {
      EXPECT_NEAR(back[i].mixed_pct[m].mean, aggs[i].mixed_pct[m].mean, 1e-9);
      EXPECT_NEAR(back[i].mixed_pct[m].sem, aggs[i].mixed_pct[m].sem, 1e-9);
    }
    EXPECT_NEAR(back[i].f2_pct.mean, aggs[i].f2_pct.mean, 1e-9);
  }
  EXPECT_EQ(census_table(back, 4).rows.size(), t.rows.size());
}

TEST(OtherTables, ColumnsAndReparse) {
  const auto aggs = small_sweep(true);
  const Table neg = negativity_table(aggs);
  EXPECT_EQ(neg.columns.front(), "q");
  EXPECT_EQ(neg.columns.size(), 7u);
  const Table avg = average_state_table(aggs, 4, RootMode::kPaperN);
  EXPECT_EQ(avg.columns.back(), "neg_split_2");
  EXPECT_EQ(avg.rows[0][avg.column("purity")], 1.0);
  EXPECT_EQ(avg.rows[0][avg.column("coherence")], 15.0);
  const Table red = reductions_table(aggs, 4);
  EXPECT_EQ(red.columns[1], "tri_1_2_3");
  const Table perc = percolation_table(aggs);
  EXPECT_EQ(perc.columns, (std::vector<std::string>{"q", "pct", "se"}));
  for (const Table* t : {&neg, &avg, &red, &perc}) {
    const Table csv = parse_csv(to_csv(*t));
    const Table json = parse_json_table(to_json_text(*t));
    EXPECT_EQ(to_csv(csv), to_csv(*t));
    EXPECT_EQ(to_csv(json), to_csv(*t));
  }
  EXPECT_THROW(avg.column("missing"), InvalidInput);
}

TEST(ThresholdJson, RoundTrip) {
  const ThresholdResult ok{2, 0.8123, 0.01, 3, "ok"};
  const ThresholdResult back = threshold_from_json(threshold_to_json(ok));
  EXPECT_EQ(back.k, 2);
  EXPECT_EQ(back.q_star, 0.8123);
  EXPECT_EQ(back.uncertainty, 0.01);
  EXPECT_EQ(back.dropped, 3);
  ThresholdResult bad{1, std::nan(""), 0, 0, "no_crossing"};
  const auto j = threshold_to_json(bad);
  EXPECT_TRUE(j.at("q_star").is_null());
  EXPECT_TRUE(std::isnan(threshold_from_json(j).q_star));
}

TEST(QGrid, Parsing) {
  EXPECT_EQ(parse_q_grid("0:1:0.25"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(parse_q_grid("0.1, 0.4,0.9"), (std::vector<double>{0.1, 0.4, 0.9}));
  EXPECT_EQ(parse_q_grid("0"), (std::vector<double>{0}));
  EXPECT_THROW(parse_q_grid(""), InvalidInput);
  EXPECT_THROW(parse_q_grid("0:1"), InvalidInput);
  EXPECT_THROW(parse_q_grid("0.5,0.2"), InvalidInput);
  EXPECT_THROW(parse_q_grid("a"), InvalidInput);
  EXPECT_THROW(parse_q_grid("1.2"), InvalidInput);
  EXPECT_EQ(parse_pair("1,4"), (std::pair<int, int>{1, 4}));
  EXPECT_THROW(parse_pair("1"), InvalidInput);
  EXPECT_THROW(parse_pair("1.5,2"), InvalidInput);
}

TEST(Manifest, JsonRoundTrip) {
  RunManifest m;
  m.options.command = "percolation";
  m.options.n = 6;
  m.options.q_spec = "0:1:0.5";
  m.options.samples = 123;
  m.options.seed = 99;
  m.options.pair = {1, 4};
  m.options.root_mode = RootMode::kBipartitionCount;
  m.options.fit_family = FitFamily::kGeneralizedLogistic;
  m.tool_version = tool_version();
  m.timestamp = "2026-01-01T00:00:00Z";
  m.csv_schema_version = kCsvSchemaVersion;
  m.outputs["percolation.csv"] = sha256_hex("x");
  const nlohmann::json j = manifest_to_json(m);
  EXPECT_EQ(j.at("config").at("q_grid").size(), 3u);
  const RunManifest back = manifest_from_json(j);
  EXPECT_EQ(manifest_to_json(back), j);
  EXPECT_THROW(manifest_from_json(nlohmann::json::object()), InvalidInput);
}

TEST(Sha256, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Svg, ChartStructure) {
  LineChart c;
  c.title = "A <b> & c";
  c.y_label = "pct";
  c.series.push_back({"s1", "#000000", {0, 0.5, 1}, {0, 50, 100}, {0, 5, 0}, true});
  c.vertical.push_back({0.4, "T2"});
  c.vertical.push_back({0.7, "T3"});
  const std::string svg = c.render();
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("A &lt;b&gt; &amp; c"), std::string::npos);
  std::size_t dashed = 0;
  for (std::size_t p = svg.find("stroke-dasharray"); p != std::string::npos;
       p = svg.find("stroke-dasharray", p + 1))
    ++dashed;
  EXPECT_EQ(dashed, 2u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);

  c.log_y = true;
  c.series[0].y = {1e-3, 0.1, 1};
  const std::string log_svg = c.render();
  EXPECT_NE(log_svg.find(">0.001<"), std::string::npos);
}

TEST(Cli, SweepAtZeroWritesZeroRow) {
  const fs::path dir = scratch_dir("zero");
  ASSERT_EQ(cli({"sweep", "--n", "4", "--q", "0", "--samples", "10", "--out", dir.string()}), kExitOk);
  const Table t = parse_csv(read_text_file((dir / "census.csv").string()));
  ASSERT_EQ(t.rows.size(), 1u);
  for (double v : t.rows[0]) EXPECT_EQ(v, 0.0);
  const auto th = nlohmann::json::parse(read_text_file((dir / "thresholds.json").string()));
  EXPECT_EQ(th.at("thresholds").at(0).at("status"), "insufficient_points");
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
}

TEST(Cli, SweepOutputsAndReplay) {
  const fs::path dir = scratch_dir("sweep");
  ASSERT_EQ(cli({"sweep", "--n", "4", "--q", "0:1:0.05", "--samples", "200", "--seed", "3", "--out",
                 dir.string(), "--plot", "census.svg", "--n-boot", "20"}),
            kExitOk);
  for (const char* f : {"census.csv", "thresholds.json", "manifest.json", "census.svg"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  const auto manifest = nlohmann::json::parse(read_text_file((dir / "manifest.json").string()));
  EXPECT_EQ(manifest.at("outputs").size(), 3u);
  EXPECT_EQ(manifest.at("outputs").at("census.csv"),
            sha256_hex(read_text_file((dir / "census.csv").string())));
  const auto th = nlohmann::json::parse(read_text_file((dir / "thresholds.json").string()));
  EXPECT_EQ(th.at("thresholds").size(), 3u);
  EXPECT_EQ(th.at("max_f2").at("status"), "ok");

  const fs::path again = scratch_dir("sweep_replay");
  std::string out;
  EXPECT_EQ(cli({"replay", "--manifest", (dir / "manifest.json").string(), "--out", again.string()}, &out),
            kExitOk);
  EXPECT_EQ(out.find("MISMATCH"), std::string::npos);

  auto tampered = manifest;
  tampered["outputs"]["census.csv"] = sha256_hex("");
  write_text_file((dir / "tampered.json").string(), tampered.dump());
  EXPECT_EQ(cli({"replay", "--manifest", (dir / "tampered.json").string(), "--out", again.string()}, &out),
            kExitRuntime);
  EXPECT_NE(out.find("MISMATCH census.csv"), std::string::npos);
}

TEST(Cli, JsonFormat) {
  const fs::path dir = scratch_dir("json");
  ASSERT_EQ(cli({"negativity", "--n", "3", "--q", "0:1:0.25", "--samples", "30", "--format", "json",
                 "--out", dir.string()}),
            kExitOk);
  const Table t = parse_json_table(read_text_file((dir / "negativity.json").string()));
  EXPECT_EQ(t.rows.size(), 5u);
  EXPECT_FALSE(fs::exists(dir / "negativity.csv"));
}

TEST(Cli, EverySubcommandRuns) {
  const fs::path dir = scratch_dir("all");
  const std::vector<std::string> common = {"--n", "4", "--q", "0:1:0.25", "--samples", "20", "--out",
                                           dir.string()};
  for (const std::string cmd : {"average-state", "reductions"}) {
    std::vector<std::string> args = {cmd};
    args.insert(args.end(), common.begin(), common.end());
    args.insert(args.end(), {"--plot", cmd + ".svg"});
    EXPECT_EQ(cli(args), kExitOk) << cmd;
  }
  std::vector<std::string> perc = {"percolation", "--pair", "1,3"};
  perc.insert(perc.end(), common.begin(), common.end());
  EXPECT_EQ(cli(perc), kExitOk);
  for (const char* f : {"average_state.csv", "reductions.csv", "percolation.csv", "average-state.svg",
                        "reductions.svg"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
}

TEST(Cli, SamplePrintsGraph) {
  std::string out;
  ASSERT_EQ(cli({"sample", "--n", "3", "--q", "1", "--index", "4", "--amplitudes"}, &out), kExitOk);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j.at("graph").at("edges").size(), 3u);
  EXPECT_EQ(j.at("amplitudes").size(), 8u);
  EXPECT_EQ(cli({"sample", "--n", "3", "--q", "0.5", "--q-index", "2"}), kExitUsage);
}

TEST(Cli, ExitCodes) {
  std::string out, err;
  EXPECT_EQ(cli({"--help"}, &out), kExitOk);
  EXPECT_NE(out.find("sweep"), std::string::npos);
  EXPECT_EQ(cli({}, &out, &err), kExitUsage);
  EXPECT_EQ(cli({"sweep", "--bogus"}), kExitUsage);
  EXPECT_EQ(cli({"sweep", "--n", "13"}), kExitUsage);
  EXPECT_EQ(cli({"sweep", "--q", "0:2:x"}), kExitUsage);
  EXPECT_EQ(cli({"sweep", "--format", "xml"}), kExitUsage);
  EXPECT_EQ(cli({"sweep", "--root-mode", "cube"}), kExitUsage);
  EXPECT_EQ(cli({"percolation", "--n", "4"}), kExitUsage);
  EXPECT_EQ(cli({"average-state", "--n", "11", "--q", "0.5"}), kExitUsage);
  // Output path that is a regular file.
  const fs::path blocker = scratch_dir("blocker");
  write_text_file(blocker.string(), "x");
  EXPECT_EQ(cli({"sweep", "--q", "0", "--samples", "2", "--out", blocker.string()}, &out, &err),
            kExitRuntime);
  EXPECT_FALSE(err.empty());
}

TEST(Cli, ThreadCountDoesNotChangeOutputs) {
  const fs::path a = scratch_dir("t1"), b = scratch_dir("t3");
  const std::vector<std::string> base = {"negativity", "--n", "5", "--q", "0:1:0.1", "--samples", "150",
                                         "--seed", "21"};
  auto args = base;
  args.insert(args.end(), {"--threads", "1", "--out", a.string()});
  ASSERT_EQ(cli(args), kExitOk);
  args = base;
  args.insert(args.end(), {"--threads", "3", "--out", b.string()});
  ASSERT_EQ(cli(args), kExitOk);
  for (const char* f : {"census.csv", "negativity.csv", "thresholds.json"})
    EXPECT_EQ(read_text_file((a / f).string()), read_text_file((b / f).string())) << f;
}

}  // namespace
}  // namespace randcluster
