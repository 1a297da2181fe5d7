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

#include <vector>

#include "core/matrix.hpp"

namespace coh {

/// d^2 - 1 traceless Hermitian operators, orthonormal under Tr(F_k F_l).
class OperatorBasis {
 public:
  /// Generalized Gell-Mann family in the canonical order: symmetric pairs
  /// (|i><j| + |j><i|)/sqrt(2) for i < j lexicographically, then the
  /// antisymmetric pairs (-i|i><j| + i|j><i|)/sqrt(2), then the diagonal
  /// operators diag(1, ..., 1, -l, 0, ...)/sqrt(l(l+1)) for l = 1..d-1.
  static OperatorBasis gell_mann(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(ops_.size()); }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Matrix& op(int k) const { return ops_[k]; }

 private:
  OperatorBasis(int dim, std::vector<Matrix> ops)
      : dim_(dim), ops_(std::move(ops)) {}

  int dim_;
  std::vector<Matrix> ops_;
};

/// The basis regrouped as a (d+1) x (d-1) grid F[b][n] plus the per-group
/// sums, the layout the unbiased-measurement construction consumes. Grouping
/// is by contiguous blocks of the canonical order, so it is deterministic.
class PartitionedBasis {
 public:
  static PartitionedBasis from_basis(OperatorBasis basis);

  int dim() const { return flat_.dim(); }
  int group_count() const { return flat_.dim() + 1; }
  int group_size() const { return flat_.dim() - 1; }

  /// b in [0, d], n in [0, d-2].
  const Matrix& op(int b, int n) const { return flat_.op(b * group_size() + n); }
  const Matrix& group_sum(int b) const { return group_sums_[b]; }
  const OperatorBasis& flat() const { return flat_; }

 private:
  PartitionedBasis(OperatorBasis flat, std::vector<Matrix> sums)
      : flat_(std::move(flat)), group_sums_(std::move(sums)) {}

  OperatorBasis flat_;
  std::vector<Matrix> group_sums_;
};

/// Complete orthogonal observable set: the Gell-Mann family plus I/sqrt(d),
/// d^2 operators with Tr(H_i H_j) = delta_ij.
class ObservableSet {
 public:
  static ObservableSet standard(int dim);

  int dim() const { return dim_; }
  const std::vector<Matrix>& ops() const { return ops_; }

 private:
  ObservableSet(int dim, std::vector<Matrix> ops)
      : dim_(dim), ops_(std::move(ops)) {}

  int dim_;
  std::vector<Matrix> ops_;
};

}  // namespace coh
