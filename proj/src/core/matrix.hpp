// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace coh {

using cplx = std::complex<double>;

/// Dense complex square matrix with row-major storage and value semantics.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim);
  Matrix(int dim, std::vector<cplx> entries);

  static Matrix identity(int dim);
  static Matrix diagonal(std::span<const double> diag);

  int dim() const { return dim_; }

  cplx& operator()(int row, int col) { return entries_[row * dim_ + col]; }
  const cplx& operator()(int row, int col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const cplx> entries() const { return entries_; }
  std::span<cplx> entries() { return entries_; }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx scale);

  Matrix adjoint() const;
  cplx trace() const;

  /// Largest entrywise modulus.
  double max_abs() const;
  double frobenius_norm() const;
  /// max |A - A^dagger| over all entries.
  double hermiticity_error() const;

 private:
  int dim_ = 0;
  std::vector<cplx> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(cplx scale, Matrix m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

/// Hilbert-Schmidt inner product Tr(A^dagger B).
cplx hs_inner(const Matrix& a, const Matrix& b);

/// Tr(AB) without forming the product.
cplx trace_product(const Matrix& a, const Matrix& b);

/// max |A - B| over all entries; dims must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

}  // namespace coh
