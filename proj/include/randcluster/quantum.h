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

#ifndef RANDCLUSTER_QUANTUM_H
#define RANDCLUSTER_QUANTUM_H

#include <cstdint>
#include <span>
#include <vector>

#include "randcluster/linalg.h"

namespace randcluster {

// Qubit labels are 1-based network indices e_1..e_N. Qubit e_i lives on bit
// (i - 1) of a basis index: e_1 is the least significant bit. Every fixture
// in the test suite depends on this convention.

inline constexpr int kMaxStateQubits = 12;
inline constexpr int kMaxDensityQubits = 10;

/// Sorted set of distinct 1-based qubit labels.
class QubitSet {
 public:
  QubitSet() = default;
  /// Sorts and validates; throws InvalidInput on duplicates or labels < 1.
  explicit QubitSet(std::vector<int> labels);
  QubitSet(std::initializer_list<int> labels) : QubitSet(std::vector<int>(labels)) {}

  /// Qubits whose bits are set in `mask` (bit i-1 for label i).
  static QubitSet from_mask(std::uint64_t mask);
  static QubitSet all(int n);

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool contains(int label) const;
  std::uint64_t mask() const;
  int max_label() const { return labels_.empty() ? 0 : labels_.back(); }

  /// Labels of [1, n] not in this set.
  QubitSet complement(int n) const;

  friend bool operator==(const QubitSet&, const QubitSet&) = default;
  friend auto operator<=>(const QubitSet&, const QubitSet&) = default;

 private:
  std::vector<int> labels_;
};

/// Pure state of n qubits (1 <= n <= 12), 2^n amplitudes.
class StateVector {
 public:
  /// Throws InvalidInput unless amplitudes.size() == 2^n and the norm is 1 within 1e-10.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }
  double norm_squared() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  friend StateVector apply_cphase(StateVector, int, int);
  friend StateVector apply_hadamard(StateVector, int);

  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Hermitian unit-trace matrix over the qubits in `labels` (ascending). The
/// k-th label in ascending order sits on bit k of the matrix index.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), trace (1e-10) and dim == 2^|labels|.
  DensityMatrix(ComplexMatrix matrix, QubitSet labels);

  static DensityMatrix projector(const StateVector& state);

  int n_qubits() const { return static_cast<int>(labels_.size()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const QubitSet& labels() const { return labels_; }

 private:
  ComplexMatrix matrix_;
  QubitSet labels_;
};

StateVector plus_state(int n);
/// Basis state |b>, where bit (i-1) of b is the value of qubit e_i.
StateVector basis_state(int n, std::uint64_t b);

/// CZ on qubits (i, j): negates amplitudes whose bits i-1 and j-1 are both set.
StateVector apply_cphase(StateVector state, int i, int j);
StateVector apply_hadamard(StateVector state, int i);

/// Reduced density matrix on `keep`, contracted directly from amplitudes.
DensityMatrix reduce(const StateVector& state, const QubitSet& keep);

/// Purity Tr[rho_keep^2] without building the reduced matrix of the larger side.
double reduction_purity(const StateVector& state, const QubitSet& keep);

/// Transposes the subsystem `side`, which must be a non-empty proper subset of
/// rho's labels.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& side);

/// Squared Schmidt coefficients across side | rest, ascending. These are the
/// eigenvalues of reduce(state, side).
std::vector<double> schmidt_squares(const StateVector& state, const QubitSet& side);

}  // namespace randcluster

#endif  // RANDCLUSTER_QUANTUM_H
