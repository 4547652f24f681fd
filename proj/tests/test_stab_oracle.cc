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
#include "randcluster/stab_oracle.h"
#include "test_support.h"

namespace randcluster {
namespace {

TEST(CutMatrix, Shape) {
  const GraphInstance g(4, {{1, 2}, {2, 3}, {3, 4}});
  const BinaryMatrix m = cut_matrix(g, {2, 3});
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_TRUE(m.get(0, 0));   // 2-1
  EXPECT_FALSE(m.get(0, 1));  // 2-4
  EXPECT_FALSE(m.get(1, 0));  // 3-1
  EXPECT_TRUE(m.get(1, 1));   // 3-4
}

TEST(OraclePurity, Examples) {
  EXPECT_EQ(oracle_purity(GraphInstance(5, {}), {1, 4}), 1.0);
  EXPECT_EQ(oracle_purity(GraphInstance(2, {{1, 2}}), {1}), 0.5);
  EXPECT_EQ(oracle_purity(GraphInstance(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), {1, 2}),
            0.5);
}

TEST(OraclePureNegativity, Examples) {
  EXPECT_EQ(oracle_pure_negativity(GraphInstance(4, {}), {2}), 0.0);
  EXPECT_EQ(oracle_pure_negativity(GraphInstance(4, {{2, 3}}), {1, 2}), 1.0);
  EXPECT_EQ(oracle_pure_negativity(GraphInstance(4, {{1, 2}, {2, 3}, {3, 4}}), {2, 3}), 3.0);
}

TEST(Oracle, RejectsInvalidSigma) {
  const GraphInstance g(3, {{1, 2}});
  EXPECT_THROW(cut_rank(g, QubitSet{}), InvalidInput);
  EXPECT_THROW(cut_rank(g, {1, 2, 3}), InvalidInput);
  EXPECT_THROW(oracle_purity(g, {4}), InvalidInput);
}

TEST(OracleProperty, DenseSimulationAgreesForAllSubsets) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 6;
    const GraphInstance g = testing::random_graph(n, 0.5, rng);
    const StateVector s = build_state(g);
    for (std::uint64_t mask = 1; mask + 1 < (1u << n); ++mask) {
      const QubitSet side = QubitSet::from_mask(mask);
      ASSERT_NEAR(purity(reduce(s, side)), oracle_purity(g, side), 1e-9);
      ASSERT_NEAR(pure_negativity(s, side), oracle_pure_negativity(g, side), 1e-9);
    }
  }
}

TEST(OracleProperty, CutRankIsComplementSymmetric) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const GraphInstance g = testing::random_graph(n, 0.4, rng);
    const QubitSet side = QubitSet::from_mask(1 + rng() % ((1u << n) - 2));
    ASSERT_EQ(cut_rank(g, side), cut_rank(g, side.complement(n)));
  }
}

}  // namespace
}  // namespace randcluster
