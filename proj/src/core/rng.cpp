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
#include "core/rng.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "core/errors.hpp"

namespace coh {

DensityMatrix trusted_density(Matrix m);  // density.cpp

Pcg32::Pcg32(RngSeed s) : state_(0), inc_((s.stream << 1u) | 1u) {
  next_u32();
  state_ += s.seed;
  next_u32();
}

std::uint32_t Pcg32::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const std::uint32_t xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t Pcg32::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32u) | next_u32();
}

double Pcg32::next_double() {
  return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
}

double Pcg32::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_double();  // (0, 1]
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cplx Pcg32::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

DensityMatrix random_density(int dim, int rank, RngSeed seed) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "dimension must be >= 1");
  if (rank < 1 || rank > dim)
    raise(ErrorCode::bad_rank, "rank must lie in [1, dim]");

  Pcg32 rng(seed);
  std::vector<cplx> g(static_cast<std::size_t>(dim) * rank);
  for (auto& e : g) e = rng.next_complex_gaussian();

  Matrix rho(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c <= r; ++c) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < rank; ++k)
        s += g[static_cast<std::size_t>(r) * rank + k] *
             std::conj(g[static_cast<std::size_t>(c) * rank + k]);
      rho(r, c) = s;
      rho(c, r) = std::conj(s);  // exactly Hermitian
    }
  }
  const double tr = rho.trace().real();
  rho *= cplx{1.0 / tr, 0.0};
  return trusted_density(std::move(rho));
}

Matrix haar_unitary(int dim, RngSeed seed) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "dimension must be >= 1");

  Pcg32 rng(seed);
  Matrix a(dim);
  for (auto& e : a.entries()) e = rng.next_complex_gaussian();

  // Modified Gram-Schmidt with one reorthogonalization pass; column norms are
  // the (positive real) R diagonal, which fixes the Haar phase convention.
  Matrix q(dim);
  for (int j = 0; j < dim; ++j) {
    std::vector<cplx> v(dim);
    for (int r = 0; r < dim; ++r) v[r] = a(r, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        cplx proj{0.0, 0.0};
        for (int r = 0; r < dim; ++r) proj += std::conj(q(r, i)) * v[r];
        for (int r = 0; r < dim; ++r) v[r] -= proj * q(r, i);
      }
    }
    double norm2 = 0.0;
    for (const auto& e : v) norm2 += std::norm(e);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int r = 0; r < dim; ++r) q(r, j) = v[r] * inv;
  }
  return q;
}

Matrix random_hermitian(int dim, RngSeed seed) {
  Pcg32 rng(seed);
  Matrix h(dim);
  for (int r = 0; r < dim; ++r) {
    h(r, r) = rng.next_gaussian();
    for (int c = r + 1; c < dim; ++c) {
      const cplx e = 0.5 * rng.next_complex_gaussian();
      h(r, c) = e;
      h(c, r) = std::conj(e);
    }
  }
  return h;
}

}  // namespace coh
