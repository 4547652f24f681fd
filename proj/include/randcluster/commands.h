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

#ifndef RANDCLUSTER_COMMANDS_H
#define RANDCLUSTER_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "randcluster/analysis.h"
#include "randcluster/mc_engine.h"

namespace randcluster {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Everything a command needs; the manifest stores exactly this.
struct CommandOptions {
  std::string command;
  int n = 4;
  std::string q_spec = "0:1:0.02";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_dir = ".";
  std::string format = "csv";
  std::string plot;
  double purity_tol = kDefaultPurityTolerance;
  RootMode root_mode = RootMode::kPaperN;
  std::pair<int, int> pair = {0, 0};
  FitFamily fit_family = kDefaultFitFamily;
  int n_boot = kDefaultBootstrapRefits;
  double level = kDefaultLevel;
  // `sample` only
  std::uint64_t sample_index = 0;
  std::uint32_t q_index = 0;
  bool amplitudes = false;
};

/// "start:stop:step" or a comma separated list.
std::vector<double> parse_q_grid(const std::string& spec);
std::pair<int, int> parse_pair(const std::string& spec);

SweepConfig make_sweep_config(const CommandOptions& opts);

struct RunManifest {
  CommandOptions options;
  std::string tool_version;
  std::string timestamp;
  int csv_schema_version = 0;
  /// File name (relative to the output directory) to SHA-256 hex digest.
  std::map<std::string, std::string> outputs;
};

nlohmann::json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);
std::string sha256_hex(const std::string& bytes);
std::string tool_version();

/// Executes a parsed command, writing files under opts.out_dir (or JSON to
/// `out` for `sample`). Returns the manifest of written files.
RunManifest run_command(const CommandOptions& opts, std::ostream& out);

/// Full command-line entry point; returns an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace randcluster

#endif  // RANDCLUSTER_COMMANDS_H
