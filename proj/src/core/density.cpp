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
#include "core/density.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "core/errors.hpp"

namespace coh {

// Internal constructor bypassing validation for states exact by construction.
DensityMatrix trusted_density(Matrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
  const double herm = m.hermiticity_error();
  if (herm > 1e-12) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max |A - A^dagger| = " << herm;
    raise(ErrorCode::not_density, msg.str());
  }
  const cplx tr = m.trace();
  if (std::abs(tr - cplx{1.0, 0.0}) > 1e-12) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << " + " << tr.imag()
        << "i, expected 1";
    raise(ErrorCode::not_density, msg.str());
  }
  const auto eig = eigh(m);
  if (eig.eigenvalues.front() < -1e-10) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: smallest eigenvalue "
        << eig.eigenvalues.front();
    raise(ErrorCode::not_density, msg.str());
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure_basis_state(int dim, int index) {
  if (index < 0 || index >= dim)
    raise(ErrorCode::invalid_argument, "basis state index out of range");
  Matrix m(dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> amplitudes) {
  const int d = static_cast<int>(amplitudes.size());
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 <= 0.0)
    raise(ErrorCode::invalid_argument, "cannot normalize the zero vector");
  Matrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const {
  return trace_product(matrix_, matrix_).real();
}

Matrix matrix_power(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    raise(ErrorCode::bad_alpha, "matrix power exponent must lie in (0, 1]");
  const auto eig = eigh(rho.matrix());
  auto lambda = clamp_psd_spectrum(eig.eigenvalues);
  for (double& l : lambda) l = l > 0.0 ? std::pow(l, alpha) : 0.0;
  return assemble_from_spectrum(eig, lambda);
}

Matrix sqrt_density(const DensityMatrix& rho) { return matrix_power(rho, 0.5); }

double trace_power(const DensityMatrix& rho, double p) {
  if (!(p > 0.0))
    raise(ErrorCode::bad_alpha, "trace power exponent must be positive");
  const auto eig = eigh(rho.matrix());
  const auto lambda = clamp_psd_spectrum(eig.eigenvalues);
  double s = 0.0;
  for (double l : lambda)
    if (l > 0.0) s += std::pow(l, p);
  return s;
}

}  // namespace coh
