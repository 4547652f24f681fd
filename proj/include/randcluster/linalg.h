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

#ifndef RANDCLUSTER_LINALG_H
#define RANDCLUSTER_LINALG_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace randcluster {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }

  bool is_hermitian(double tol = 1e-12) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(double factor);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
/// Tr[a† b].
Complex frobenius_product(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic Jacobi sweeps with complex Givens rotations; stops when the
/// off-diagonal Frobenius norm falls below 1e-12 (relative to the matrix
/// norm when that exceeds one) or after 100 sweeps. Throws InvalidInput if
/// the matrix is not Hermitian within 1e-12.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Matrix over GF(2), rows packed into 64-bit words.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  /// row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  BinaryMatrix transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

std::size_t gf2_rank(BinaryMatrix m);

}  // namespace randcluster

#endif  // RANDCLUSTER_LINALG_H
