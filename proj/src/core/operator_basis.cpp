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
#include "core/operator_basis.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace coh {

OperatorBasis OperatorBasis::gell_mann(int dim) {
  if (dim < 2)
    raise(ErrorCode::invalid_argument,
          "operator basis requires dimension >= 2, got " + std::to_string(dim));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(dim) * dim - 1);

  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Matrix m(dim);
      m(i, j) = inv_sqrt2;
      m(j, i) = inv_sqrt2;
      ops.push_back(std::move(m));
    }
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Matrix m(dim);
      m(i, j) = cplx{0.0, -inv_sqrt2};
      m(j, i) = cplx{0.0, inv_sqrt2};
      ops.push_back(std::move(m));
    }
  }
  for (int l = 1; l < dim; ++l) {
    Matrix m(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int i = 0; i < l; ++i) m(i, i) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    ops.push_back(std::move(m));
  }

  return OperatorBasis(dim, std::move(ops));
}

PartitionedBasis PartitionedBasis::from_basis(OperatorBasis basis) {
  const int d = basis.dim();
  if (basis.size() != d * d - 1)
    raise(ErrorCode::invalid_argument,
          "partition needs exactly d^2 - 1 operators, got " +
              std::to_string(basis.size()));

  std::vector<Matrix> sums;
  sums.reserve(d + 1);
  for (int b = 0; b <= d; ++b) {
    Matrix s(d);
    for (int n = 0; n < d - 1; ++n) s += basis.op(b * (d - 1) + n);
    sums.push_back(std::move(s));
  }
  return PartitionedBasis(std::move(basis), std::move(sums));
}

ObservableSet ObservableSet::standard(int dim) {
  auto basis = OperatorBasis::gell_mann(dim);
  std::vector<Matrix> ops = basis.ops();
  Matrix id = Matrix::identity(dim);
  id *= cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0};
  ops.push_back(std::move(id));
  return ObservableSet(dim, std::move(ops));
}

}  // namespace coh
