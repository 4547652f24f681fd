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

#include "randcluster/measures.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "randcluster/errors.h"

namespace randcluster {

std::string to_string(RootMode mode) {
  return mode == RootMode::kPaperN ? "paper_n" : "bipartition_count";
}

RootMode root_mode_from_string(const std::string& text) {
  if (text == "paper" || text == "paper_n") return RootMode::kPaperN;
  if (text == "bipartitions" || text == "bipartition_count") return RootMode::kBipartitionCount;
  throw InvalidInput("unknown root mode '" + text + "' (expected paper or bipartitions)");
}

double purity(const DensityMatrix& rho) {
  double p = 0.0;
  for (const auto& e : rho.matrix().data()) p += std::norm(e);
  return p;
}

double negativity(const DensityMatrix& rho, const QubitSet& side) {
  const auto eig = hermitian_eigenvalues(partial_transpose(rho, side));
  double negative_sum = 0.0;
  for (double v : eig)
    if (v < -kNegativeEigenTolerance) negative_sum += v;
  return std::max(0.0, -2.0 * negative_sum);
}

double pure_negativity(const StateVector& state, const QubitSet& side) {
  double root_sum = 0.0;
  for (double mu : schmidt_squares(state, side))
    if (mu > kSchmidtWeightFloor) root_sum += std::sqrt(mu);
  return std::max(0.0, root_sum * root_sum - 1.0);
}

std::vector<QubitSet> canonical_bipartitions(const QubitSet& labels) {
  const auto& all = labels.labels();
  if (all.size() < 2) throw InvalidInput("canonical_bipartitions: need at least two qubits");
  const std::size_t others = all.size() - 1;
  std::vector<QubitSet> sides;
  sides.reserve((std::size_t{1} << others) - 1);
  // The side always contains all[0]; choose any subset of the others except all of them.
  for (std::uint64_t pick = 0; pick + 1 < (std::uint64_t{1} << others); ++pick) {
    std::vector<int> side = {all[0]};
    for (std::size_t k = 0; k < others; ++k)
      if ((pick >> k) & 1U) side.push_back(all[k + 1]);
    sides.emplace_back(std::move(side));
  }
  std::sort(sides.begin(), sides.end(), [](const QubitSet& a, const QubitSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return sides;
}

double rooted_product(const std::vector<double>& factors, int n_qubits, RootMode mode) {
  if (factors.empty()) return 0.0;
  double log_sum = 0.0;
  for (double f : factors) {
    if (!(f > kNegativeEigenTolerance)) return 0.0;
    log_sum += std::log(f);
  }
  const double exponent = mode == RootMode::kPaperN
                              ? 1.0 / n_qubits
                              : 1.0 / static_cast<double>(factors.size());
  return std::exp(exponent * log_sum);
}

NegativityReport negativity_report(const StateVector& state, RootMode mode) {
  NegativityReport report;
  report.root_mode = mode;
  std::vector<double> factors;
  for (const auto& side : canonical_bipartitions(QubitSet::all(state.n_qubits()))) {
    const double e = pure_negativity(state, side);
    report.per_bipartition.emplace(side, e);
    factors.push_back(e);
  }
  report.multipartite = rooted_product(factors, state.n_qubits(), mode);
  return report;
}

NegativityReport negativity_report(const DensityMatrix& rho, RootMode mode) {
  NegativityReport report;
  report.root_mode = mode;
  std::vector<double> factors;
  for (const auto& side : canonical_bipartitions(rho.labels())) {
    const double e = negativity(rho, side);
    report.per_bipartition.emplace(side, e);
    factors.push_back(e);
  }
  report.multipartite = rooted_product(factors, rho.n_qubits(), mode);
  return report;
}

double multipartite_negativity(const StateVector& state, RootMode mode) {
  return negativity_report(state, mode).multipartite;
}

double multipartite_negativity(const DensityMatrix& rho, RootMode mode) {
  return negativity_report(rho, mode).multipartite;
}

double l1_coherence(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  double c = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) c += std::abs(m(i, j));
  return c;
}

ReductionCensus census(const StateVector& state, double purity_tol) {
  const int n = state.n_qubits();
  ReductionCensus out;
  out.n = n;
  out.per_size.assign(static_cast<std::size_t>(n), SizeCount{});
  if (n < 2) return out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Pure global state: a subset and its complement share one purity, so each
  // bipartition is evaluated once (through its canonical side) and counted twice.
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1U)) continue;
    const QubitSet side = QubitSet::from_mask(mask);
    const double p = reduction_purity(state, side);
    const bool mixed = p < 1.0 - purity_tol;
    const int m = static_cast<int>(side.size());
    for (int size : {m, n - m}) {
      auto& slot = out.per_size[static_cast<std::size_t>(size)];
      ++slot.total;
      if (mixed) ++slot.mixed;
    }
    if (std::abs(p - 0.25) < purity_tol) {
      if (m == 2) ++out.f2_hits;
      if (n - m == 2) ++out.f2_hits;
    }
  }
  return out;
}

}  // namespace randcluster
