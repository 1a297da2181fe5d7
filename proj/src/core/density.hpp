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

#include <span>

#include "core/eigen.hpp"
#include "core/matrix.hpp"

namespace coh {

/// Quantum state: Hermitian (1e-12), unit-trace (1e-12), positive
/// semidefinite (smallest eigenvalue >= -1e-10) complex matrix.
class DensityMatrix {
 public:
  /// Validates all invariants; throws NotDensity describing the violation.
  static DensityMatrix from_matrix(Matrix m);

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix pure_basis_state(int dim, int index);
  /// Projector onto the given ket, normalized if needed.
  static DensityMatrix pure(std::span<const cplx> amplitudes);

  int dim() const { return matrix_.dim(); }
  const Matrix& matrix() const { return matrix_; }

  double purity() const;

 private:
  friend DensityMatrix trusted_density(Matrix m);
  explicit DensityMatrix(Matrix m) : matrix_(std::move(m)) {}

  Matrix matrix_;
};

/// rho^alpha for alpha in (0, 1], by eigendecomposition with the PSD spectrum
/// clamp (negatives within -1e-10 flushed to zero, below that NotPositive).
Matrix matrix_power(const DensityMatrix& rho, double alpha);

/// rho^(1/2).
Matrix sqrt_density(const DensityMatrix& rho);

/// Sum of clamped eigenvalues raised to `p` (p > 0); Tr at p = 1.
double trace_power(const DensityMatrix& rho, double p);

}  // namespace coh
