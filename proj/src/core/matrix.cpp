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
#include "core/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace coh {

Matrix::Matrix(int dim) : dim_(dim) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
  entries_.assign(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
}

Matrix::Matrix(int dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) raise(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim)
    raise(ErrorCode::invalid_argument,
          "entry count does not match a " + std::to_string(dim) + "x" +
              std::to_string(dim) + " matrix");
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx Matrix::trace() const {
  cplx t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double Matrix::hermiticity_error() const {
  double m = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(cplx scale, Matrix m) { return m *= scale; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs, "matrix multiplication");
  const int d = lhs.dim();
  Matrix out(d);
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      const cplx v = lhs(r, k);
      if (v == cplx{0.0, 0.0}) continue;
      for (int c = 0; c < d; ++c) out(r, c) += v * rhs(k, c);
    }
  }
  return out;
}

cplx hs_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "Hilbert-Schmidt inner product");
  cplx s{0.0, 0.0};
  auto ae = a.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < ae.size(); ++i) s += std::conj(ae[i]) * be[i];
  return s;
}

cplx trace_product(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "trace of product");
  const int d = a.dim();
  cplx s{0.0, 0.0};
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) s += a(r, c) * b(c, r);
  return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "matrix comparison");
  double m = 0.0;
  auto ae = a.entries();
  auto be = b.entries();
  for (std::size_t i = 0; i < ae.size(); ++i)
    m = std::max(m, std::abs(ae[i] - be[i]));
  return m;
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim())
    raise(ErrorCode::dim_mismatch, std::string(what) + ": dimensions " +
                                       std::to_string(a.dim()) + " and " +
                                       std::to_string(b.dim()) + " differ");
}

}  // namespace coh
