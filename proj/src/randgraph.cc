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

#include "randcluster/randgraph.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "json.hpp"

#include "randcluster/errors.h"

namespace randcluster {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(product);
  hi = static_cast<std::uint32_t>(product >> 32);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kPhiloxM0, ctr[0], lo0, hi0);
    mulhilo(kPhiloxM1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

double RandomStream::next_uniform() {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(position_), spec_.lane,
      static_cast<std::uint32_t>(spec_.sample_index),
      static_cast<std::uint32_t>(spec_.sample_index >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(spec_.master_seed),
                                            static_cast<std::uint32_t>(spec_.master_seed >> 32)};
  ++position_;
  const auto out = philox4x32_10(ctr, key);
  const std::uint64_t bits =
      ((static_cast<std::uint64_t>(out[0]) << 32) | out[1]) >> 11;  // 53 bits
  return static_cast<double>(bits) * 0x1.0p-53;
}

double RandomStream::next_normal() {
  const double u1 = 1.0 - next_uniform();  // (0, 1]
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RandomStream substream(const SeedSpec& spec) { return RandomStream(spec); }

GraphInstance::GraphInstance(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > 64) throw InvalidInput("GraphInstance: n must be in [1, 64]");
  for (auto& [i, j] : edges_) {
    if (i > j) std::swap(i, j);
    if (i == j) throw InvalidInput("GraphInstance: self-loops are not allowed");
    if (i < 1 || j > n) throw InvalidInput("GraphInstance: vertex index out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidInput("GraphInstance: duplicate edge");
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : edges_) {
    adjacency_[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
    adjacency_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
  }
}

bool GraphInstance::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return false;
  return (adjacency_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
}

std::string GraphInstance::digest() const {
  // FNV-1a over n and the pair ranks of present edges.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const auto& [i, j] : edges_) mix(pair_rank(n_, i, j));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t pair_rank(int n, int i, int j) {
  if (i < 1 || j <= i || j > n) throw InvalidInput("pair_rank: need 1 <= i < j <= n");
  // Pairs with first element < i, then offset within row i.
  const auto ui = static_cast<std::size_t>(i - 1);
  const auto un = static_cast<std::size_t>(n);
  return ui * un - ui * (ui + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

GraphInstance sample_graph(int n, double q, RandomStream& rng) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("sample_graph: q must lie in [0, 1]");
  if (n < 2) throw InvalidInput("sample_graph: n must be at least 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.next_uniform() < q) edges.emplace_back(i, j);
  return GraphInstance(n, std::move(edges));
}

StateVector build_state(const GraphInstance& g) {
  StateVector s = plus_state(g.n());
  for (const auto& [i, j] : g.edges()) s = apply_cphase(std::move(s), i, j);
  return s;
}

std::string graph_to_json(const GraphInstance& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

GraphInstance graph_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("graph_from_json: edge must be [i, j]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return GraphInstance(j.at("n").get<int>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("graph_from_json: ") + e.what());
  }
}

}  // namespace randcluster
