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

#include "randcluster/quantum.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "randcluster/errors.h"

namespace randcluster {

QubitSet::QubitSet(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidInput("QubitSet: duplicate qubit label");
  }
  if (!labels_.empty() && labels_.front() < 1) {
    throw InvalidInput("QubitSet: qubit labels are 1-based");
  }
  if (!labels_.empty() && labels_.back() > 64) {
    throw InvalidInput("QubitSet: qubit label out of range");
  }
}

QubitSet QubitSet::from_mask(std::uint64_t mask) {
  std::vector<int> labels;
  for (int bit = 0; bit < 64; ++bit)
    if ((mask >> bit) & 1U) labels.push_back(bit + 1);
  return QubitSet(std::move(labels));
}

QubitSet QubitSet::all(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  return QubitSet(std::move(labels));
}

bool QubitSet::contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::uint64_t QubitSet::mask() const {
  std::uint64_t m = 0;
  for (int label : labels_) m |= std::uint64_t{1} << (label - 1);
  return m;
}

QubitSet QubitSet::complement(int n) const {
  std::vector<int> rest;
  for (int i = 1; i <= n; ++i)
    if (!contains(i)) rest.push_back(i);
  return QubitSet(std::move(rest));
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
    throw InvalidInput("StateVector: n_qubits must be in [1, 12], got " + std::to_string(n_qubits));
  }
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw InvalidInput("StateVector: expected 2^n amplitudes");
  }
  if (std::abs(norm_squared() - 1.0) > 1e-10) {
    throw InvalidInput("StateVector: amplitudes are not normalized");
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, QubitSet labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxStateQubits)) {
    throw InvalidInput("DensityMatrix: label set must hold 1..12 qubits");
  }
  if (matrix_.dim() != (std::size_t{1} << labels_.size())) {
    throw InvalidInput("DensityMatrix: dimension does not match the label set");
  }
  if (!matrix_.is_hermitian(1e-12)) {
    throw InvalidInput("DensityMatrix: matrix is not Hermitian within 1e-12");
  }
  const Complex t = trace(matrix_);
  if (std::abs(t.real() - 1.0) > 1e-10 || std::abs(t.imag()) > 1e-10) {
    throw InvalidInput("DensityMatrix: trace is not 1 within 1e-10");
  }
}

DensityMatrix DensityMatrix::projector(const StateVector& state) {
  if (state.n_qubits() > kMaxDensityQubits) {
    throw ResourceLimit("DensityMatrix::projector: full density matrices are capped at 10 qubits");
  }
  return reduce(state, QubitSet::all(state.n_qubits()));
}

StateVector plus_state(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw InvalidInput("plus_state: n must be in [1, 12], got " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(n, std::vector<Complex>(dim, Complex(std::pow(2.0, -0.5 * n), 0.0)));
}

StateVector basis_state(int n, std::uint64_t b) {
  if (n < 1 || n > kMaxStateQubits) throw InvalidInput("basis_state: n must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << n;
  if (b >= dim) throw InvalidInput("basis_state: basis index out of range");
  std::vector<Complex> amps(dim);
  amps[b] = 1.0;
  return StateVector(n, std::move(amps));
}

namespace {

void check_qubit(const StateVector& s, int i, const char* what) {
  if (i < 1 || i > s.n_qubits()) {
    throw InvalidInput(std::string(what) + ": qubit index " + std::to_string(i) +
                       " outside [1, " + std::to_string(s.n_qubits()) + "]");
  }
}

void check_subset(const QubitSet& set, int n, const char* what) {
  if (set.empty()) throw InvalidInput(std::string(what) + ": qubit set must be non-empty");
  if (set.max_label() > n) throw InvalidInput(std::string(what) + ": qubit label exceeds n");
}

// Scatter tables: deposit(a) places the bits of a onto the given positions.
std::vector<std::size_t> deposit_table(const std::vector<int>& labels) {
  const std::size_t count = std::size_t{1} << labels.size();
  std::vector<std::size_t> table(count);
  for (std::size_t a = 0; a < count; ++a) {
    std::size_t b = 0;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if ((a >> k) & 1U) b |= std::size_t{1} << (labels[k] - 1);
    table[a] = b;
  }
  return table;
}

// Gram matrix G[a][a'] = sum_r psi(a, r) conj(psi(a', r)) over the `side`
// index a. Only the upper triangle and diagonal are filled.
ComplexMatrix side_gram(const StateVector& s, const QubitSet& side) {
  const QubitSet rest = side.complement(s.n_qubits());
  const auto keep_idx = deposit_table(side.labels());
  const auto rest_idx = deposit_table(rest.labels());
  const std::size_t dk = keep_idx.size();
  const std::size_t dr = rest_idx.size();
  const auto amps = s.amplitudes();

  std::vector<Complex> psi(dk * dr);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t r = 0; r < dr; ++r) psi[a * dr + r] = amps[keep_idx[a] | rest_idx[r]];

  ComplexMatrix g(dk);
  for (std::size_t a = 0; a < dk; ++a) {
    const Complex* row_a = &psi[a * dr];
    for (std::size_t b = a; b < dk; ++b) {
      const Complex* row_b = &psi[b * dr];
      Complex acc{};
      for (std::size_t r = 0; r < dr; ++r) acc += row_a[r] * std::conj(row_b[r]);
      g(a, b) = acc;
    }
  }
  return g;
}

}  // namespace

StateVector apply_cphase(StateVector state, int i, int j) {
  check_qubit(state, i, "apply_cphase");
  check_qubit(state, j, "apply_cphase");
  if (i == j) throw InvalidInput("apply_cphase: control and target must differ");
  const std::size_t both = (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
  for (std::size_t b = 0; b < state.amplitudes_.size(); ++b)
    if ((b & both) == both) state.amplitudes_[b] = -state.amplitudes_[b];
  return state;
}

StateVector apply_hadamard(StateVector state, int i) {
  check_qubit(state, i, "apply_hadamard");
  const std::size_t bit = std::size_t{1} << (i - 1);
  const double h = 1.0 / std::sqrt(2.0);
  auto& amps = state.amplitudes_;
  for (std::size_t b = 0; b < amps.size(); ++b) {
    if (b & bit) continue;
    const Complex a0 = amps[b];
    const Complex a1 = amps[b | bit];
    amps[b] = h * (a0 + a1);
    amps[b | bit] = h * (a0 - a1);
  }
  return state;
}

DensityMatrix reduce(const StateVector& state, const QubitSet& keep) {
  check_subset(keep, state.n_qubits(), "reduce");
  if (keep.size() > static_cast<std::size_t>(kMaxDensityQubits)) {
    throw ResourceLimit("reduce: reduced density matrices are capped at 10 qubits");
  }
  ComplexMatrix rho = side_gram(state, keep);
  for (std::size_t a = 0; a < rho.dim(); ++a) {
    rho(a, a) = rho(a, a).real();
    for (std::size_t b = a + 1; b < rho.dim(); ++b) rho(b, a) = std::conj(rho(a, b));
  }
  return DensityMatrix(std::move(rho), keep);
}

double reduction_purity(const StateVector& state, const QubitSet& keep) {
  check_subset(keep, state.n_qubits(), "reduction_purity");
  const int n = state.n_qubits();
  const QubitSet rest = keep.complement(n);
  if (rest.empty()) {
    const double norm = state.norm_squared();
    return norm * norm;
  }
  const QubitSet& side = keep.size() <= rest.size() ? keep : rest;
  const ComplexMatrix g = side_gram(state, side);
  double p = 0.0;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    p += std::norm(g(a, a));
    for (std::size_t b = a + 1; b < g.dim(); ++b) p += 2.0 * std::norm(g(a, b));
  }
  return p;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& side) {
  const auto& labels = rho.labels().labels();
  if (side.empty() || side.size() >= labels.size()) {
    throw InvalidInput("partial_transpose: side must be a non-empty proper subset");
  }
  std::size_t tmask = 0;
  for (int label : side.labels()) {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) {
      throw InvalidInput("partial_transpose: side contains a qubit not held by the matrix");
    }
    tmask |= std::size_t{1} << static_cast<std::size_t>(it - labels.begin());
  }
  const ComplexMatrix& m = rho.matrix();
  const std::size_t d = m.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t ti = (i & ~tmask) | (j & tmask);
      const std::size_t tj = (j & ~tmask) | (i & tmask);
      out(i, j) = m(ti, tj);
    }
  }
  return out;
}

std::vector<double> schmidt_squares(const StateVector& state, const QubitSet& side) {
  check_subset(side, state.n_qubits(), "schmidt_squares");
  if (side.size() >= static_cast<std::size_t>(state.n_qubits())) {
    throw InvalidInput("schmidt_squares: side must be a proper subset");
  }
  const QubitSet rest = side.complement(state.n_qubits());
  // Same spectrum from either side; diagonalize the smaller Gram matrix.
  const QubitSet& small = side.size() <= rest.size() ? side : rest;
  return hermitian_eigenvalues(reduce(state, small).matrix());
}

}  // namespace randcluster
