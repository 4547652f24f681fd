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

#include "randcluster/errors.h"
#include "randcluster/measures.h"
#include "randcluster/randgraph.h"
#include "randcluster/stab_oracle.h"
#include "test_support.h"

namespace randcluster {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

GraphInstance complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return GraphInstance(n, e);
}

DensityMatrix bell_projector() {
  return DensityMatrix::projector(StateVector(2, {kInvSqrt2, 0, 0, kInvSqrt2}));
}

DensityMatrix maximally_mixed(int n) {
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << n);
  m *= 1.0 / static_cast<double>(std::size_t{1} << n);
  return DensityMatrix(m, QubitSet::all(n));
}

TEST(Purity, PureProjector) {
  std::mt19937_64 rng(1);
  EXPECT_NEAR(purity(DensityMatrix::projector(testing::random_generic_state(4, rng))), 1.0, 1e-10);
}

TEST(Purity, MaximallyMixedPair) { EXPECT_NEAR(purity(maximally_mixed(2)), 0.25, 1e-15); }

TEST(Purity, CompleteGraphPairReduction) {
  EXPECT_NEAR(purity(reduce(build_state(complete(4)), {2, 4})), 0.5, 1e-12);
}

TEST(Negativity, ProductStateIsZero) {
  EXPECT_EQ(negativity(DensityMatrix::projector(plus_state(3)), {1}), 0.0);
}

TEST(Negativity, BellStateIsOne) { EXPECT_NEAR(negativity(bell_projector(), {1}), 1.0, 1e-12); }

TEST(Negativity, TwoQubitCluster) {
  const DensityMatrix rho = DensityMatrix::projector(build_state(GraphInstance(2, {{1, 2}})));
  EXPECT_NEAR(negativity(rho, {1}), 1.0, 1e-12);
  EXPECT_NEAR(negativity(rho, {2}), 1.0, 1e-12);
}

TEST(Negativity, MaximallyMixedIsZero) { EXPECT_EQ(negativity(maximally_mixed(2), {1}), 0.0); }

TEST(PureNegativity, Examples) {
  EXPECT_EQ(pure_negativity(plus_state(3), {1, 2}), 0.0);
  EXPECT_NEAR(pure_negativity(StateVector(2, {kInvSqrt2, 0, 0, kInvSqrt2}), {2}), 1.0, 1e-12);
  // Two Bell pairs across the cut: flat spectrum of four 1/4 weights.
  const StateVector two_bells = build_state(GraphInstance(4, {{1, 3}, {2, 4}}));
  EXPECT_NEAR(pure_negativity(two_bells, {1, 2}), 3.0, 1e-12);
}

TEST(CanonicalBipartitions, CountsAndOrder) {
  const auto b = canonical_bipartitions(QubitSet::all(4));
  ASSERT_EQ(b.size(), 7u);
  EXPECT_EQ(b[0], (QubitSet{1}));
  EXPECT_EQ(b[1], (QubitSet{1, 2}));
  EXPECT_EQ(b[2], (QubitSet{1, 3}));
  EXPECT_EQ(b[3], (QubitSet{1, 4}));
  EXPECT_EQ(b.back(), (QubitSet{1, 3, 4}));
  for (int n = 2; n <= 8; ++n)
    EXPECT_EQ(canonical_bipartitions(QubitSet::all(n)).size(), (std::size_t{1} << (n - 1)) - 1);
  EXPECT_THROW(canonical_bipartitions(QubitSet{1}), InvalidInput);
}

TEST(MultipartiteNegativity, ProductStateIsZero) {
  EXPECT_EQ(multipartite_negativity(plus_state(4)), 0.0);
}

TEST(MultipartiteNegativity, CompleteGraphFourQubits) {
  const StateVector s = build_state(complete(4));
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kPaperN), 1.0, 1e-9);
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kBipartitionCount), 1.0, 1e-9);
  EXPECT_NEAR(multipartite_negativity(DensityMatrix::projector(s), RootMode::kPaperN), 1.0, 1e-9);
}

TEST(MultipartiteNegativity, BellPairEitherMode) {
  const StateVector s(2, {kInvSqrt2, 0, 0, kInvSqrt2});
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kPaperN), 1.0, 1e-12);
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kBipartitionCount), 1.0, 1e-12);
}

TEST(MultipartiteNegativity, MatchesDirectProductOfRoots) {
  // Path 1-2-3-4: cut ranks 1,1,2,1,2,1,1 over the canonical bipartitions.
  const GraphInstance g(4, {{1, 2}, {2, 3}, {3, 4}});
  const StateVector s = build_state(g);
  double product = 1.0;
  int count = 0;
  for (std::uint64_t mask = 1; mask < 15; ++mask) {
    if (!(mask & 1)) continue;
    const QubitSet side = QubitSet::from_mask(mask);
    product *= std::exp2(static_cast<double>(cut_rank(g, side))) - 1.0;
    ++count;
  }
  ASSERT_EQ(count, 7);
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kPaperN), std::pow(product, 1.0 / 4), 1e-9);
  EXPECT_NEAR(multipartite_negativity(s, RootMode::kBipartitionCount), std::pow(product, 1.0 / 7),
              1e-9);
}

TEST(RootMode, Parsing) {
  EXPECT_EQ(root_mode_from_string("paper"), RootMode::kPaperN);
  EXPECT_EQ(root_mode_from_string("bipartitions"), RootMode::kBipartitionCount);
  EXPECT_EQ(to_string(RootMode::kBipartitionCount), "bipartition_count");
  EXPECT_THROW(root_mode_from_string("cube"), InvalidInput);
}

TEST(L1Coherence, Examples) {
  EXPECT_NEAR(l1_coherence(DensityMatrix::projector(plus_state(4))), 15.0, 1e-12);
  EXPECT_EQ(l1_coherence(maximally_mixed(3)), 0.0);
  EXPECT_EQ(l1_coherence(DensityMatrix::projector(basis_state(3, 5))), 0.0);
}

TEST(Census, ProductState) {
  const ReductionCensus c = census(plus_state(4));
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(c.per_size[m].mixed, 0);
  EXPECT_EQ(c.per_size[1].total, 4);
  EXPECT_EQ(c.per_size[2].total, 6);
  EXPECT_EQ(c.per_size[3].total, 4);
  EXPECT_EQ(c.f2_hits, 0);
}

TEST(Census, CompleteGraph) {
  const ReductionCensus c = census(build_state(complete(4)));
  EXPECT_EQ(c.per_size[1].mixed, 4);
  EXPECT_EQ(c.per_size[2].mixed, 6);
  EXPECT_EQ(c.per_size[3].mixed, 4);
  EXPECT_EQ(c.f2_hits, 0);
}

TEST(Census, SingleEdge) {
  const ReductionCensus c = census(build_state(GraphInstance(4, {{1, 2}})));
  EXPECT_EQ(c.per_size[1].mixed, 2);
  EXPECT_EQ(c.per_size[2].mixed, 4);
  EXPECT_EQ(c.per_size[3].mixed, 2);
  EXPECT_EQ(c.f2_hits, 0);
}

TEST(Census, MatchesBruteForceOverAllSubsets) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 6;
    const GraphInstance g = testing::random_graph(n, 0.5, rng);
    const StateVector s = build_state(g);
    std::vector<int> mixed(n, 0);
    int f2 = 0;
    for (std::uint64_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const QubitSet side = QubitSet::from_mask(mask);
      const double p = purity(DensityMatrix(testing::brute_reduce(s, side), side));
      if (p < 1 - kDefaultPurityTolerance) ++mixed[side.size()];
      if (side.size() == 2 && std::abs(p - 0.25) < kDefaultPurityTolerance) ++f2;
    }
    const ReductionCensus c = census(s);
    for (int m = 1; m < n; ++m) ASSERT_EQ(c.per_size[m].mixed, mixed[m]) << "n=" << n << " m=" << m;
    ASSERT_EQ(c.f2_hits, f2);
  }
}

TEST(MeasuresProperty, GraphStateDensePathsAgreeWithOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const GraphInstance g = testing::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const StateVector s = build_state(g);
    for (std::uint64_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const QubitSet side = QubitSet::from_mask(mask);
      const double p = purity(reduce(s, side));
      ASSERT_NEAR(p, oracle_purity(g, side), 1e-9);
      // Powers of two only.
      ASSERT_NEAR(std::exp2(std::round(std::log2(p))), p, 1e-9);
    }
  }
}

TEST(MeasuresProperty, PurePathEqualsPartialTranspose) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    const StateVector s = trial % 2 ? testing::random_generic_state(n, rng)
                                    : testing::random_circuit_state(n, 20, rng);
    const DensityMatrix rho = DensityMatrix::projector(s);
    const QubitSet side = QubitSet::from_mask(1 + rng() % ((1u << n) - 2));
    ASSERT_NEAR(pure_negativity(s, side), negativity(rho, side), 1e-9);
    ASSERT_NEAR(negativity(rho, side), negativity(rho, side.complement(n)), 1e-9);
  }
}

TEST(MeasuresProperty, LocalHadamardsLeaveNegativityUnchanged) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    const StateVector s = build_state(testing::random_graph(n, 0.5, rng));
    StateVector t = s;
    for (int i = 1; i <= n; ++i)
      if (rng() & 1) t = apply_hadamard(std::move(t), i);
    const DensityMatrix rs = DensityMatrix::projector(s), rt = DensityMatrix::projector(t);
    for (const auto& side : canonical_bipartitions(QubitSet::all(n)))
      ASSERT_NEAR(negativity(rs, side), negativity(rt, side), 1e-9);
  }
}

TEST(MeasuresProperty, CensusIsSymmetric) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const ReductionCensus c = census(build_state(testing::random_graph(n, 0.3, rng)));
    for (int m = 1; m < n; ++m) ASSERT_EQ(c.per_size[m].mixed, c.per_size[n - m].mixed);
  }
}

TEST(MeasuresProperty, DisconnectedGraphsHaveZeroMultipartiteNegativity) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const int split = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((i <= split) == (j <= split) && (rng() & 1)) edges.emplace_back(i, j);
    const StateVector s = build_state(GraphInstance(n, edges));
    ASSERT_EQ(multipartite_negativity(s, RootMode::kPaperN), 0.0);
    ASSERT_EQ(multipartite_negativity(s, RootMode::kBipartitionCount), 0.0);
  }
}

}  // namespace
}  // namespace randcluster
