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
#include <string>
#include <vector>

namespace coh {

struct VerifyOptions {
  int dim_lo = 2;
  int dim_hi = 4;
  int trials = 50;
  std::uint64_t seed = 7;
  /// Scales every per-identity tolerance by tol / 1e-9; measurement-condition
  /// identities default to 1e-10 and formula-exact ones to 1e-12.
  double tol = 1e-9;
};

struct IdentityResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  long count = 0;  // number of checks folded into max_residual

  bool passed() const { return max_residual <= tolerance; }
};

struct VerifySummary {
  std::vector<IdentityResult> identities;
  bool all_passed() const;
};

/// Runs the whole identity suite over seeded random states: measurement
/// family conditions, closed-form equivalences for every average-coherence
/// quantity, the operator-basis sum rules, the cross-relations and ordering,
/// and the numerical kernels (eigensolver, fractional powers, sampling).
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace coh
