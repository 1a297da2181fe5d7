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
#include "core/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace coh {

namespace {

double offdiag_norm(const Matrix& a) {
  const int d = a.dim();
  double s = 0.0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One cyclic sweep of two-sided unitary 2x2 rotations. For the pivot (p,q)
// the Hermitian block [[a_pp, b],[conj(b), a_qq]] is diagonalized by
// U = [[c, -conj(s)],[s, c]] with c real, c^2 + |s|^2 = 1; the rotation is
// applied as A <- U^dagger A U and accumulated into V <- V U.
void sweep(Matrix& a, Matrix& v) {
  const int d = a.dim();
  for (int p = 0; p < d - 1; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const cplx b = a(p, q);
      const double babs = std::abs(b);
      if (babs == 0.0) continue;
      if (babs < 1e-300) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        continue;
      }

      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double tau = (aqq - app) / (2.0 * babs);
      // Smaller root of tan^2 - 2 tau tan - 1 = 0 keeps |theta| <= pi/4.
      const double sgn = tau >= 0.0 ? -1.0 : 1.0;
      const double tan_theta = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + tan_theta * tan_theta);
      const double sigma = tan_theta * c;
      const cplx phase = b / babs;            // e^{i arg(b)}
      const cplx s = sigma * std::conj(phase);  // lower-left entry of U
      const cplx sbar = std::conj(s);

      // New diagonal; the pivot itself becomes exactly zero.
      const double app_new = app * c * c + 2.0 * c * sigma * babs + aqq * sigma * sigma;
      const double aqq_new = app * sigma * sigma - 2.0 * c * sigma * babs + aqq * c * c;
      a(p, p) = app_new;
      a(q, q) = aqq_new;
      a(p, q) = 0.0;
      a(q, p) = 0.0;

      for (int r = 0; r < d; ++r) {
        if (r == p || r == q) continue;
        const cplx arp = a(r, p);
        const cplx arq = a(r, q);
        a(r, p) = c * arp + s * arq;
        a(r, q) = -sbar * arp + c * arq;
        a(p, r) = std::conj(a(r, p));
        a(q, r) = std::conj(a(r, q));
      }
      for (int r = 0; r < d; ++r) {
        const cplx vrp = v(r, p);
        const cplx vrq = v(r, q);
        v(r, p) = c * vrp + s * vrq;
        v(r, q) = -sbar * vrp + c * vrq;
      }
    }
  }
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
  return assemble_from_spectrum(*this, eigenvalues);
}

EigenDecomposition eigh(const Matrix& input) {
  const double herm_err = input.hermiticity_error();
  if (herm_err > 1e-12) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |A - A^dagger| = " << herm_err;
    raise(ErrorCode::not_hermitian, msg.str());
  }

  const int d = input.dim();
  // Work on the exactly Hermitian part; the input is within 1e-12 of it.
  Matrix a(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

  Matrix v = Matrix::identity(d);
  const double threshold = 1e-13 * a.frobenius_norm();

  constexpr int kMaxSweeps = 100;
  bool converged = offdiag_norm(a) <= threshold;
  for (int s = 0; s < kMaxSweeps && !converged; ++s) {
    sweep(a, v);
    converged = offdiag_norm(a) <= threshold;
  }
  if (!converged)
    raise(ErrorCode::no_convergence,
          "Jacobi eigensolver did not converge within 100 sweeps");

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors = Matrix(d);
  for (int j = 0; j < d; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int r = 0; r < d; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }
  return out;
}

std::vector<double> clamp_psd_spectrum(std::span<const double> eigenvalues,
                                       double neg_tol) {
  double lambda_max = 0.0;
  for (double l : eigenvalues) lambda_max = std::max(lambda_max, l);
  const double rank_cut = 32.0 * static_cast<double>(eigenvalues.size()) *
                          std::numeric_limits<double>::epsilon() * lambda_max;

  std::vector<double> out(eigenvalues.begin(), eigenvalues.end());
  for (double& l : out) {
    if (l < -neg_tol) {
      std::ostringstream msg;
      msg << "operator is not positive semidefinite: eigenvalue " << l
          << " below -" << neg_tol;
      raise(ErrorCode::not_positive, msg.str());
    }
    if (l <= rank_cut) l = 0.0;
  }
  return out;
}

Matrix assemble_from_spectrum(const EigenDecomposition& eig,
                              std::span<const double> f_of_lambda) {
  const Matrix& v = eig.eigenvectors;
  const int d = v.dim();
  Matrix out(d);
  for (int k = 0; k < d; ++k) {
    const double f = f_of_lambda[k];
    if (f == 0.0) continue;
    for (int r = 0; r < d; ++r) {
      const cplx vf = v(r, k) * f;
      for (int c = 0; c < d; ++c) out(r, c) += vf * std::conj(v(c, k));
    }
  }
  return out;
}

}  // namespace coh
