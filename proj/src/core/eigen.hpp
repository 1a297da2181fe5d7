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
#include <vector>

#include "core/matrix.hpp"

namespace coh {

/// Spectral factorization A = V diag(eigenvalues) V^dagger of a Hermitian
/// matrix. Eigenvalues are ascending; column j of `eigenvectors` belongs to
/// eigenvalues[j].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
};

/// Diagonalizes a Hermitian matrix with the cyclic complex Jacobi method.
///
/// Throws NotHermitian when max |A - A^dagger| > 1e-12 and NoConvergence if
/// the off-diagonal Frobenius norm does not fall below 1e-13 * ||A||_F within
/// 100 sweeps (it converges quadratically, so this is never hit in practice).
EigenDecomposition eigh(const Matrix& a);

/// Cleans the spectrum of a nominally positive semidefinite operator.
/// Eigenvalues below -neg_tol raise NotPositive; the rest are flushed to zero
/// when they fall below the rank cutoff 32 * d * eps * max(lambda), which is
/// where round-off noise of true zero eigenvalues lives. Fractional powers of
/// the noise would otherwise pollute quantities like Tr(sqrt(rho)) at the
/// 1e-8 level.
std::vector<double> clamp_psd_spectrum(std::span<const double> eigenvalues,
                                       double neg_tol = 1e-10);

/// V diag(f) V^dagger for a given spectral function table.
Matrix assemble_from_spectrum(const EigenDecomposition& eig,
                              std::span<const double> f_of_lambda);

}  // namespace coh
