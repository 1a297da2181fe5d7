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

#include <cstdint>

#include "core/density.hpp"
#include "core/matrix.hpp"

namespace coh {

/// Seed plus stream id; identical pairs reproduce identical draws, distinct
/// stream ids give statistically independent sequences, so parallel sweeps
/// stay replayable.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// PCG32 (O'Neill). Small, fast, and natively splittable by stream id.
class Pcg32 {
 public:
  explicit Pcg32(RngSeed s);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double next_double();
  /// Standard normal via Box-Muller; draws are paired, the spare is cached.
  double next_gaussian();
  cplx next_complex_gaussian();

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// rho = G G^dagger / Tr(G G^dagger) with G a dim x rank matrix of standard
/// complex Gaussian entries. Deterministic per (seed, stream).
DensityMatrix random_density(int dim, int rank, RngSeed seed);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal normalized to positive reals (Gram-Schmidt does this natively).
Matrix haar_unitary(int dim, RngSeed seed);

/// Gaussian Hermitian matrix (GUE-style, unnormalized); test and sweep fodder.
Matrix random_hermitian(int dim, RngSeed seed);

}  // namespace coh
