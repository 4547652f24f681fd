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

#ifndef RANDCLUSTER_RANDGRAPH_H
#define RANDCLUSTER_RANDGRAPH_H

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "randcluster/quantum.h"

namespace randcluster {

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Identifies one independent random stream. `lane` separates families of
/// streams under the same master seed (q-grid point, bootstrap refit).
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
  std::uint32_t lane = 0;
};

/// Counter-based stream: draw k is a pure function of (spec, k), so any
/// sample can be regenerated in isolation and in any order.
class RandomStream {
 public:
  explicit RandomStream(const SeedSpec& spec) : spec_(spec) {}

  /// Uniform in [0, 1) with 53 random bits.
  double next_uniform();
  /// Standard normal variate (Box-Muller on two uniforms).
  double next_normal();
  std::uint64_t position() const { return position_; }

 private:
  SeedSpec spec_;
  std::uint64_t position_ = 0;
};

RandomStream substream(const SeedSpec& spec);

/// Undirected simple graph on vertices 1..n; edges stored as (i, j), i < j, sorted.
class GraphInstance {
 public:
  GraphInstance(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  /// Neighbour bitmask of vertex v (bit u-1 for neighbour u).
  std::uint64_t neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  /// Hex digest of the edge set, stable across platforms.
  std::string digest() const;

  friend bool operator==(const GraphInstance& a, const GraphInstance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Rank of pair (i, j), i < j, in lexicographic order over all pairs of [1, n].
std::size_t pair_rank(int n, int i, int j);

/// Includes each pair independently iff its uniform draw is < q. Pairs are
/// visited in lexicographic order, consuming one draw each.
GraphInstance sample_graph(int n, double q, RandomStream& rng);

/// |+>^n followed by CZ on every edge.
StateVector build_state(const GraphInstance& g);

std::string graph_to_json(const GraphInstance& g);
GraphInstance graph_from_json(const std::string& text);

}  // namespace randcluster

#endif  // RANDCLUSTER_RANDGRAPH_H
