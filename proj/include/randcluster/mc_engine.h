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

#ifndef RANDCLUSTER_MC_ENGINE_H
#define RANDCLUSTER_MC_ENGINE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "randcluster/measures.h"
#include "randcluster/quantum.h"
#include "randcluster/randgraph.h"

namespace randcluster {

struct TaskSet {
  bool census = true;
  bool multipartite = false;
  bool average_state = false;
  bool reductions = false;
  bool percolation = false;
};

struct SweepConfig {
  int n = 4;
  std::vector<double> q_grid;
  std::uint64_t samples = 1000;
  std::uint64_t master_seed = 0;
  double purity_tol = kDefaultPurityTolerance;
  RootMode root_mode = RootMode::kPaperN;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  TaskSet tasks;
  /// Qubit pair scanned by the percolation task.
  std::pair<int, int> percolation_pair = {1, 2};
  /// Keep the accumulated average density matrix in the aggregate.
  bool keep_average_matrix = false;

  /// Throws InvalidInput or ResourceLimit.
  void validate() const;
};

/// 0:1:0.02 style grid, inclusive of stop (within half a step).
std::vector<double> make_grid(double start, double stop, double step);

struct MeanStat {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator; zero for a single sample).
  double stddev = 0.0;
  /// stddev / sqrt(count)
  double sem = 0.0;
};

MeanStat summarize(std::span<const double> values);

struct AverageStateSummary {
  double purity = 0.0;
  double coherence = 0.0;
  double multipartite_paper = 0.0;
  double multipartite_bipartitions = 0.0;
  /// Canonical bipartition negativities of the average state.
  std::map<QubitSet, double> bipartitions;
  /// Mean bipartition negativity grouped by the smaller side size, index 1..n/2.
  std::vector<double> mean_by_split_size;
  std::optional<DensityMatrix> matrix;
};

struct ReductionStats {
  std::vector<QubitSet> triplets;
  std::vector<MeanStat> tripartite;
  /// Mean over samples of the average PT negativity of all two-qubit reductions.
  MeanStat bipartite_mean;
};

struct QPointAggregate {
  double q = 0.0;
  std::uint64_t samples = 0;
  /// Percentage of mixed m-qubit reductions, index m in [1, n-1]; entry 0 unused.
  std::vector<MeanStat> mixed_pct;
  /// Percentage of two-qubit reductions with purity 1/4.
  MeanStat f2_pct;
  MeanStat multipartite_paper;
  MeanStat multipartite_bipartitions;
  std::optional<AverageStateSummary> average_state;
  std::optional<ReductionStats> reductions;
  /// Percentage of samples whose percolation pair reduction has negativity > 1e-10.
  std::optional<MeanStat> percolation_pct;

  const MeanStat& multipartite(RootMode mode) const {
    return mode == RootMode::kPaperN ? multipartite_paper : multipartite_bipartitions;
  }
};

struct SampleRecord {
  std::uint64_t sample_index = 0;
  std::string graph_digest;
  ReductionCensus census;
  double multipartite_paper = 0.0;
  double multipartite_bipartitions = 0.0;
  std::vector<double> tripartite;
  double bipartite_mean = 0.0;
  bool percolating = false;
};

/// Stream for sample k at grid point q_index: (master_seed, lane = q_index, k).
SeedSpec sample_seed(const SweepConfig& cfg, std::size_t q_index, std::uint64_t sample_index);

/// Graph of one sample, regenerated from its seed alone.
GraphInstance sample_instance(const SweepConfig& cfg, std::size_t q_index,
                              std::uint64_t sample_index);

/// All per-sample quantities requested by cfg.tasks for one sample.
SampleRecord evaluate_sample(const SweepConfig& cfg, std::size_t q_index,
                             std::uint64_t sample_index);

/// Runs every grid point. Output depends only on cfg minus `workers`.
std::vector<QPointAggregate> run_sweep(const SweepConfig& cfg);

/// Mean of the projectors, accumulated in sequence order.
DensityMatrix accumulate_average_state(std::span<const StateVector> states);

AverageStateSummary summarize_average_state(const DensityMatrix& rho, bool keep_matrix);

struct ReductionProfilePoint {
  double q = 0.0;
  ReductionStats stats;
};
std::vector<ReductionProfilePoint> reduction_profile(SweepConfig cfg);

struct PercolationPoint {
  double q = 0.0;
  MeanStat percent;
};
std::vector<PercolationPoint> percolation_scan(SweepConfig cfg, std::pair<int, int> pair);

/// All triplets of [1, n] in lexicographic order.
std::vector<QubitSet> all_triplets(int n);

}  // namespace randcluster

#endif  // RANDCLUSTER_MC_ENGINE_H
