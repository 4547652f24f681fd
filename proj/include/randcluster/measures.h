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

#ifndef RANDCLUSTER_MEASURES_H
#define RANDCLUSTER_MEASURES_H

#include <map>
#include <string>
#include <vector>

#include "randcluster/quantum.h"

namespace randcluster {

/// PT eigenvalues below -kNegativeEigenTolerance count as negative.
inline constexpr double kNegativeEigenTolerance = 1e-10;
inline constexpr double kDefaultPurityTolerance = 1e-9;
/// Schmidt weights below this are treated as exact zeros.
inline constexpr double kSchmidtWeightFloor = 1e-14;

/// Exponent used when taking the root of the product of bipartition negativities.
enum class RootMode {
  kPaperN,            // 1 / (number of qubits)
  kBipartitionCount,  // 1 / (2^{n-1} - 1): geometric mean over bipartitions
};

std::string to_string(RootMode mode);
/// Accepts "paper" / "paper_n" and "bipartitions" / "bipartition_count".
RootMode root_mode_from_string(const std::string& text);

double purity(const DensityMatrix& rho);

/// max(0, -2 * sum of PT eigenvalues below -1e-10).
double negativity(const DensityMatrix& rho, const QubitSet& side);

/// (sum_i sqrt(mu_i))^2 - 1 over the squared Schmidt coefficients, clamped at 0.
double pure_negativity(const StateVector& state, const QubitSet& side);

/// All bipartitions of `labels` as their canonical side: the one holding the
/// smallest label. 2^{m-1} - 1 entries for m labels.
std::vector<QubitSet> canonical_bipartitions(const QubitSet& labels);

struct NegativityReport {
  std::map<QubitSet, double> per_bipartition;
  double multipartite = 0.0;
  RootMode root_mode = RootMode::kPaperN;
};

/// Bipartition negativities of a pure state (Schmidt path) and their rooted product.
NegativityReport negativity_report(const StateVector& state, RootMode mode);
/// Same over the PT of a mixed state; used for the average network state and
/// three-qubit reductions.
NegativityReport negativity_report(const DensityMatrix& rho, RootMode mode);

/// Root of the product of per-bipartition negativities. Zero if any factor is zero.
double rooted_product(const std::vector<double>& factors, int n_qubits, RootMode mode);

double multipartite_negativity(const StateVector& state, RootMode mode = RootMode::kPaperN);
double multipartite_negativity(const DensityMatrix& rho, RootMode mode = RootMode::kPaperN);

/// Sum of |rho_ij| over i != j in the computational basis.
double l1_coherence(const DensityMatrix& rho);

struct SizeCount {
  int total = 0;
  int mixed = 0;
};

struct ReductionCensus {
  int n = 0;
  /// Indexed by reduction size m in [1, n-1]; entry 0 unused.
  std::vector<SizeCount> per_size;
  /// Two-qubit reductions with purity 1/4 (within purity_tol).
  int f2_hits = 0;
};

/// Classifies every non-empty proper reduction of a pure state as mixed when
/// its purity is below 1 - purity_tol.
ReductionCensus census(const StateVector& state, double purity_tol = kDefaultPurityTolerance);

}  // namespace randcluster

#endif  // RANDCLUSTER_MEASURES_H
