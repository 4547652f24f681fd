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

#ifndef RANDCLUSTER_TESTS_TEST_SUPPORT_H
#define RANDCLUSTER_TESTS_TEST_SUPPORT_H

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "randcluster/linalg.h"
#include "randcluster/quantum.h"
#include "randcluster/randgraph.h"

namespace randcluster::testing {

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = nd(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = Complex(nd(rng), nd(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) e(r, c) = m(r, c);
  return e;
}

/// Ascending spectrum from Eigen's self-adjoint solver.
inline std::vector<double> eigen_spectrum(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

/// Random pure state from a random circuit of H and CZ gates plus a random
/// complex normalisation-preserving phase pattern.
inline StateVector random_circuit_state(int n, int gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, n);
  std::bernoulli_distribution coin(0.5);
  StateVector s = basis_state(n, 0);
  for (int g = 0; g < gates; ++g) {
    const int i = pick(rng);
    if (n > 1 && coin(rng)) {
      int j = pick(rng);
      while (j == i) j = pick(rng);
      s = apply_cphase(std::move(s), i, j);
    } else {
      s = apply_hadamard(std::move(s), i);
    }
  }
  return s;
}

/// Haar-like random state: normalised complex Gaussian vector.
inline StateVector random_generic_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& x : a) {
    x = Complex(nd(rng), nd(rng));
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return StateVector(n, std::move(a));
}

inline GraphInstance random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return GraphInstance(n, edges);
}

/// GF(2) rank as log2 of the number of distinct vectors in the row span.
inline std::size_t brute_gf2_rank(const std::vector<std::vector<int>>& rows) {
  std::set<std::vector<int>> span;
  const std::size_t k = rows.size();
  const std::size_t width = k ? rows[0].size() : 0;
  for (std::size_t combo = 0; combo < (std::size_t{1} << k); ++combo) {
    std::vector<int> v(width, 0);
    for (std::size_t r = 0; r < k; ++r)
      if (combo >> r & 1)
        for (std::size_t c = 0; c < width; ++c) v[c] ^= rows[r][c];
    span.insert(v);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

/// Dense reduction by direct partial trace over the full projector.
inline ComplexMatrix brute_reduce(const StateVector& s, const QubitSet& keep) {
  const int n = s.n_qubits();
  const std::size_t k = keep.size();
  ComplexMatrix out(std::size_t{1} << k);
  const auto amps = s.amplitudes();
  auto sub_index = [&](std::size_t b) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (b >> (keep.labels()[t] - 1) & 1) idx |= std::size_t{1} << t;
    return idx;
  };
  const std::uint64_t rest = keep.complement(n).mask();
  for (std::size_t a = 0; a < amps.size(); ++a)
    for (std::size_t b = 0; b < amps.size(); ++b)
      if ((a & rest) == (b & rest)) out(sub_index(a), sub_index(b)) += amps[a] * std::conj(amps[b]);
  return out;
}

}  // namespace randcluster::testing

#endif  // RANDCLUSTER_TESTS_TEST_SUPPORT_H
