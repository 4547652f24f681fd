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

#ifndef RANDCLUSTER_STAB_ORACLE_H
#define RANDCLUSTER_STAB_ORACLE_H

#include <cstddef>

#include "randcluster/linalg.h"
#include "randcluster/quantum.h"
#include "randcluster/randgraph.h"

namespace randcluster {

// Graph-state predictions from GF(2) cut-rank alone. A graph state's reduction
// on sigma has a flat spectrum of 2^r equal weights, r = rank of the adjacency
// block between sigma and its complement.

/// Rows index sigma, columns index the complement, both ascending.
BinaryMatrix cut_matrix(const GraphInstance& g, const QubitSet& sigma);
std::size_t cut_rank(const GraphInstance& g, const QubitSet& sigma);

/// 2^-r
double oracle_purity(const GraphInstance& g, const QubitSet& sigma);
/// 2^r - 1
double oracle_pure_negativity(const GraphInstance& g, const QubitSet& sigma);

}  // namespace randcluster

#endif  // RANDCLUSTER_STAB_ORACLE_H
