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

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "randcluster/commands.h"
#include "randcluster/errors.h"

namespace randcluster {

std::string tool_version() { return RANDCLUSTER_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

nlohmann::json manifest_to_json(const RunManifest& m) {
  const auto& o = m.options;
  nlohmann::json cfg;
  cfg["command"] = o.command;
  cfg["n"] = o.n;
  cfg["q"] = o.q_spec;
  cfg["q_grid"] = parse_q_grid(o.q_spec);
  cfg["samples"] = o.samples;
  cfg["seed"] = o.seed;
  cfg["threads"] = o.threads;
  cfg["format"] = o.format;
  cfg["plot"] = o.plot;
  cfg["purity_tol"] = o.purity_tol;
  cfg["root_mode"] = to_string(o.root_mode);
  cfg["pair"] = {o.pair.first, o.pair.second};
  cfg["fit_family"] = to_string(o.fit_family);
  cfg["n_boot"] = o.n_boot;
  cfg["level"] = o.level;
  cfg["sample_index"] = o.sample_index;
  cfg["q_index"] = o.q_index;
  cfg["amplitudes"] = o.amplitudes;

  nlohmann::json j;
  j["tool"] = "randcluster";
  j["tool_version"] = m.tool_version;
  j["timestamp"] = m.timestamp;
  j["csv_schema_version"] = m.csv_schema_version;
  j["fit_family"] = to_string(o.fit_family);
  j["bit_convention"] = "qubit e_i on bit i-1 (e_1 least significant)";
  j["prng"] = "philox4x32-10; key=seed, counter=(draw, q_index, sample_index)";
  j["config"] = cfg;
  j["outputs"] = m.outputs;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  try {
    RunManifest m;
    const auto& cfg = j.at("config");
    auto& o = m.options;
    o.command = cfg.at("command").get<std::string>();
    o.n = cfg.at("n").get<int>();
    o.q_spec = cfg.at("q").get<std::string>();
    o.samples = cfg.at("samples").get<std::uint64_t>();
    o.seed = cfg.at("seed").get<std::uint64_t>();
    o.threads = cfg.at("threads").get<unsigned>();
    o.format = cfg.at("format").get<std::string>();
    o.plot = cfg.at("plot").get<std::string>();
    o.purity_tol = cfg.at("purity_tol").get<double>();
    o.root_mode = root_mode_from_string(cfg.at("root_mode").get<std::string>());
    o.pair = {cfg.at("pair").at(0).get<int>(), cfg.at("pair").at(1).get<int>()};
    o.fit_family = fit_family_from_string(cfg.at("fit_family").get<std::string>());
    o.n_boot = cfg.at("n_boot").get<int>();
    o.level = cfg.at("level").get<double>();
    o.sample_index = cfg.at("sample_index").get<std::uint64_t>();
    o.q_index = cfg.at("q_index").get<std::uint32_t>();
    o.amplitudes = cfg.at("amplitudes").get<bool>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.timestamp = j.at("timestamp").get<std::string>();
    m.csv_schema_version = j.at("csv_schema_version").get<int>();
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("manifest: ") + e.what());
  }
}

}  // namespace randcluster
