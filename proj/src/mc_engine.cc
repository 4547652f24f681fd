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

#include "randcluster/mc_engine.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "randcluster/errors.h"

namespace randcluster {

namespace {

// Samples per accumulation block. Fixed so that the floating-point summation
// order of the average state never depends on the worker count.
constexpr std::uint64_t kBlockSize = 64;

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any task is rethrown on the caller's thread.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void add_projector(ComplexMatrix& acc, const StateVector& s) {
  const auto amps = s.amplitudes();
  const std::size_t d = amps.size();
  for (std::size_t i = 0; i < d; ++i) {
    const Complex ai = amps[i];
    for (std::size_t j = 0; j < d; ++j) acc(i, j) += ai * std::conj(amps[j]);
  }
}

DensityMatrix finish_average(ComplexMatrix sum, std::uint64_t count, int n) {
  sum *= 1.0 / static_cast<double>(count);
  return DensityMatrix(std::move(sum), QubitSet::all(n));
}

}  // namespace

void SweepConfig::validate() const {
  if (n < 2 || n > kMaxStateQubits) {
    throw ResourceLimit("sweep: n must be in [2, 12], got " + std::to_string(n));
  }
  if (q_grid.empty()) throw InvalidInput("sweep: q grid is empty");
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!(q_grid[i] >= 0.0 && q_grid[i] <= 1.0)) {
      throw InvalidInput("sweep: q grid values must lie in [0, 1]");
    }
    if (i > 0 && !(q_grid[i] > q_grid[i - 1])) {
      throw InvalidInput("sweep: q grid must be strictly ascending");
    }
  }
  if (samples < 1) throw InvalidInput("sweep: samples must be positive");
  if (!(purity_tol > 0.0 && purity_tol < 0.5)) {
    throw InvalidInput("sweep: purity tolerance must lie in (0, 0.5)");
  }
  if (tasks.average_state && n > kMaxDensityQubits) {
    throw ResourceLimit("sweep: the average state needs the full density matrix, capped at n <= 10");
  }
  if (tasks.reductions && n < 3) throw InvalidInput("sweep: reduction profile needs n >= 3");
  if (tasks.percolation) {
    const auto [i, j] = percolation_pair;
    if (i == j || i < 1 || j < 1 || i > n || j > n) {
      throw InvalidInput("sweep: percolation pair must be two distinct qubits in [1, n]");
    }
  }
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw InvalidInput("grid: step must be positive");
  if (stop < start) throw InvalidInput("grid: stop must not precede start");
  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  for (std::size_t k = 0; k < count; ++k) {
    // Round to 1e-12 so 0.1 + 0.2 style drift never leaks into outputs.
    const double v = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
    grid.push_back(std::min(v, stop));
  }
  return grid;
}

MeanStat summarize(std::span<const double> values) {
  MeanStat s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    s.sem = s.stddev / std::sqrt(static_cast<double>(values.size()));
  }
  return s;
}

std::vector<QubitSet> all_triplets(int n) {
  std::vector<QubitSet> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back(QubitSet{a, b, c});
  return out;
}

SeedSpec sample_seed(const SweepConfig& cfg, std::size_t q_index, std::uint64_t sample_index) {
  return SeedSpec{cfg.master_seed, sample_index, static_cast<std::uint32_t>(q_index)};
}

GraphInstance sample_instance(const SweepConfig& cfg, std::size_t q_index,
                              std::uint64_t sample_index) {
  RandomStream rng = substream(sample_seed(cfg, q_index, sample_index));
  return sample_graph(cfg.n, cfg.q_grid.at(q_index), rng);
}

namespace {

SampleRecord evaluate_state(const SweepConfig& cfg, const GraphInstance& g,
                            const StateVector& state, std::uint64_t sample_index) {
  SampleRecord rec;
  rec.sample_index = sample_index;
  rec.graph_digest = g.digest();
  if (cfg.tasks.census) rec.census = census(state, cfg.purity_tol);
  if (cfg.tasks.multipartite) {
    std::vector<double> factors;
    for (const auto& side : canonical_bipartitions(QubitSet::all(cfg.n)))
      factors.push_back(pure_negativity(state, side));
    rec.multipartite_paper = rooted_product(factors, cfg.n, RootMode::kPaperN);
    rec.multipartite_bipartitions = rooted_product(factors, cfg.n, RootMode::kBipartitionCount);
  }
  if (cfg.tasks.reductions) {
    for (const auto& triplet : all_triplets(cfg.n))
      rec.tripartite.push_back(multipartite_negativity(reduce(state, triplet), cfg.root_mode));
    double sum = 0.0;
    int pairs = 0;
    for (int i = 1; i <= cfg.n; ++i) {
      for (int j = i + 1; j <= cfg.n; ++j) {
        sum += negativity(reduce(state, QubitSet{i, j}), QubitSet{i});
        ++pairs;
      }
    }
    rec.bipartite_mean = sum / pairs;
  }
  if (cfg.tasks.percolation) {
    const auto [i, j] = cfg.percolation_pair;
    const DensityMatrix pair_state = reduce(state, QubitSet{i, j});
    rec.percolating = negativity(pair_state, QubitSet{i}) > kNegativeEigenTolerance;
  }
  return rec;
}

}  // namespace

SampleRecord evaluate_sample(const SweepConfig& cfg, std::size_t q_index,
                             std::uint64_t sample_index) {
  const GraphInstance g = sample_instance(cfg, q_index, sample_index);
  return evaluate_state(cfg, g, build_state(g), sample_index);
}

DensityMatrix accumulate_average_state(std::span<const StateVector> states) {
  if (states.empty()) throw InvalidInput("accumulate_average_state: no states");
  const int n = states.front().n_qubits();
  if (n > kMaxDensityQubits) {
    throw ResourceLimit("accumulate_average_state: capped at 10 qubits");
  }
  ComplexMatrix sum(std::size_t{1} << n);
  for (const auto& s : states) {
    if (s.n_qubits() != n) throw InvalidInput("accumulate_average_state: mixed qubit counts");
    add_projector(sum, s);
  }
  return finish_average(std::move(sum), states.size(), n);
}

AverageStateSummary summarize_average_state(const DensityMatrix& rho, bool keep_matrix) {
  AverageStateSummary out;
  out.purity = purity(rho);
  out.coherence = l1_coherence(rho);
  const NegativityReport report = negativity_report(rho, RootMode::kPaperN);
  out.bipartitions = report.per_bipartition;
  out.multipartite_paper = report.multipartite;
  std::vector<double> factors;
  for (const auto& [side, value] : report.per_bipartition) factors.push_back(value);
  out.multipartite_bipartitions =
      rooted_product(factors, rho.n_qubits(), RootMode::kBipartitionCount);
  const int n = rho.n_qubits();
  out.mean_by_split_size.assign(static_cast<std::size_t>(n / 2 + 1), 0.0);
  std::vector<int> counts(out.mean_by_split_size.size(), 0);
  for (const auto& [side, value] : report.per_bipartition) {
    const auto m = std::min<std::size_t>(side.size(), static_cast<std::size_t>(n) - side.size());
    out.mean_by_split_size[m] += value;
    ++counts[m];
  }
  for (std::size_t m = 1; m < counts.size(); ++m)
    if (counts[m] > 0) out.mean_by_split_size[m] /= counts[m];
  if (keep_matrix) out.matrix = rho;
  return out;
}

std::vector<QPointAggregate> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const unsigned workers = resolve_workers(cfg.workers);
  const std::uint64_t q_count = cfg.samples;
  const std::uint64_t blocks = (q_count + kBlockSize - 1) / kBlockSize;
  const std::size_t dim = std::size_t{1} << cfg.n;
  const auto n = static_cast<std::size_t>(cfg.n);

  std::vector<QPointAggregate> out;
  out.reserve(cfg.q_grid.size());

  for (std::size_t qi = 0; qi < cfg.q_grid.size(); ++qi) {
    std::vector<SampleRecord> records(q_count);
    std::optional<ComplexMatrix> average;
    if (cfg.tasks.average_state) average.emplace(dim);

    // Blocks are evaluated in waves; partial sums are merged in block order.
    const std::uint64_t wave = cfg.tasks.average_state ? std::max<unsigned>(workers, 1) : blocks;
    for (std::uint64_t first = 0; first < blocks; first += wave) {
      const std::uint64_t count = std::min(wave, blocks - first);
      std::vector<std::optional<ComplexMatrix>> partial(count);
      parallel_for(count, workers, [&](std::size_t w) {
        const std::uint64_t block = first + w;
        const std::uint64_t begin = block * kBlockSize;
        const std::uint64_t end = std::min(q_count, begin + kBlockSize);
        if (cfg.tasks.average_state) partial[w].emplace(dim);
        for (std::uint64_t k = begin; k < end; ++k) {
          const GraphInstance g = sample_instance(cfg, qi, k);
          const StateVector state = build_state(g);
          records[k] = evaluate_state(cfg, g, state, k);
          if (partial[w]) add_projector(*partial[w], state);
        }
      });
      if (average) {
        for (auto& p : partial) *average += *p;
      }
    }

    QPointAggregate agg;
    agg.q = cfg.q_grid[qi];
    agg.samples = q_count;
    std::vector<double> values(q_count);
    auto collect = [&](auto&& extract) {
      for (std::uint64_t k = 0; k < q_count; ++k) values[k] = extract(records[k]);
      return summarize(values);
    };
    if (cfg.tasks.census) {
      agg.mixed_pct.assign(n, MeanStat{});
      for (std::size_t m = 1; m < n; ++m) {
        agg.mixed_pct[m] = collect([m](const SampleRecord& r) {
          const auto& c = r.census.per_size[m];
          return 100.0 * c.mixed / c.total;
        });
      }
      const double pairs = static_cast<double>(n * (n - 1) / 2);
      agg.f2_pct = collect([pairs](const SampleRecord& r) { return 100.0 * r.census.f2_hits / pairs; });
    }
    if (cfg.tasks.multipartite) {
      agg.multipartite_paper = collect([](const SampleRecord& r) { return r.multipartite_paper; });
      agg.multipartite_bipartitions =
          collect([](const SampleRecord& r) { return r.multipartite_bipartitions; });
    }
    if (cfg.tasks.reductions) {
      ReductionStats stats;
      stats.triplets = all_triplets(cfg.n);
      for (std::size_t t = 0; t < stats.triplets.size(); ++t)
        stats.tripartite.push_back(collect([t](const SampleRecord& r) { return r.tripartite[t]; }));
      stats.bipartite_mean = collect([](const SampleRecord& r) { return r.bipartite_mean; });
      agg.reductions = std::move(stats);
    }
    if (cfg.tasks.percolation) {
      agg.percolation_pct = collect([](const SampleRecord& r) { return r.percolating ? 100.0 : 0.0; });
    }
    if (average) {
      agg.average_state = summarize_average_state(
          finish_average(std::move(*average), q_count, cfg.n), cfg.keep_average_matrix);
    }
    out.push_back(std::move(agg));
  }
  return out;
}

std::vector<ReductionProfilePoint> reduction_profile(SweepConfig cfg) {
  cfg.tasks = TaskSet{};
  cfg.tasks.census = false;
  cfg.tasks.reductions = true;
  std::vector<ReductionProfilePoint> out;
  for (auto& agg : run_sweep(cfg)) out.push_back({agg.q, std::move(*agg.reductions)});
  return out;
}

std::vector<PercolationPoint> percolation_scan(SweepConfig cfg, std::pair<int, int> pair) {
  cfg.tasks = TaskSet{};
  cfg.tasks.census = false;
  cfg.tasks.percolation = true;
  cfg.percolation_pair = pair;
  std::vector<PercolationPoint> out;
  for (const auto& agg : run_sweep(cfg)) out.push_back({agg.q, *agg.percolation_pct});
  return out;
}

}  // namespace randcluster
