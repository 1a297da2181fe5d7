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
#include <cmath>
#include <doctest.h>

#include "core/density.hpp"
#include "core/eigen.hpp"
#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"

using namespace coh;

namespace {

Matrix hermitian_fixture(int d, std::uint64_t stream) {
  return random_hermitian(d, {20260101, stream});
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("basic algebra and trace") {
  Matrix id = Matrix::identity(3);
  CHECK(id.trace() == cplx{3.0, 0.0});
  CHECK(hs_inner(id, id).real() == doctest::Approx(3.0));

  Matrix x(2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  CHECK(std::abs(hs_inner(x, Matrix::identity(2))) == doctest::Approx(0.0));

  Matrix prod = x * x;
  CHECK(max_abs_diff(prod, Matrix::identity(2)) == doctest::Approx(0.0));
}

TEST_CASE("adjoint and hermiticity error") {
  Matrix m(2);
  m(0, 1) = cplx{1.0, 2.0};
  CHECK(m.hermiticity_error() > 1.0);
  CHECK(max_abs_diff(m.adjoint().adjoint(), m) == 0.0);

  Matrix h = hermitian_fixture(4, 1);
  CHECK(h.hermiticity_error() == 0.0);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(hs_inner(Matrix::identity(2), Matrix::identity(3)), Error);
  try {
    hs_inner(Matrix::identity(2), Matrix::identity(3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dim_mismatch);
  }
  CHECK_THROWS_AS(Matrix(3, std::vector<cplx>(4)), Error);
}

}  // TEST_SUITE

TEST_SUITE("eigh") {

TEST_CASE("identity and diagonal inputs") {
  const auto eig_id = eigh(Matrix::identity(3));
  for (double l : eig_id.eigenvalues) CHECK(l == doctest::Approx(1.0));
  Matrix gram = eig_id.eigenvectors.adjoint() * eig_id.eigenvectors;
  gram -= Matrix::identity(3);
  CHECK(gram.max_abs() <= 1e-11);

  const std::vector<double> d = {3.0, 1.0, 2.0};
  const auto eig = eigh(Matrix::diagonal(d));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(eig.eigenvalues[2] == doctest::Approx(3.0));
}

TEST_CASE("reconstruction residual stays below 1e-11") {
  for (int d : {2, 3, 5, 8, 12, 16}) {
    const Matrix h = hermitian_fixture(d, 100 + d);
    const auto eig = eigh(h);
    const double scale = std::max(1.0, h.max_abs());
    CHECK(max_abs_diff(eig.reconstruct(), h) <= 1e-11 * scale);
    Matrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    gram -= Matrix::identity(d);
    CHECK(gram.max_abs() <= 1e-11);
  }
}

TEST_CASE("deterministic for identical input") {
  const Matrix h = hermitian_fixture(6, 7);
  const auto a = eigh(h);
  const auto b = eigh(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m(2);
  m(0, 1) = 1.0;  // missing the conjugate partner
  try {
    eigh(m);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_hermitian);
  }
}

}  // TEST_SUITE

TEST_SUITE("density") {

TEST_CASE("validation accepts states and rejects non-states") {
  CHECK_NOTHROW(DensityMatrix::from_matrix(
      DensityMatrix::maximally_mixed(4).matrix()));

  Matrix wrong_trace = Matrix::identity(2);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(wrong_trace), Error);

  const std::vector<double> indefinite = {1.5, -0.5};
  try {
    DensityMatrix::from_matrix(Matrix::diagonal(indefinite));
    FAIL("expected NotDensity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_density);
  }
}

TEST_CASE("matrix_power of the maximally mixed state is scalar") {
  const auto rho = DensityMatrix::maximally_mixed(5);
  for (double alpha : {0.3, 0.5, 1.0}) {
    const Matrix p = matrix_power(rho, alpha);
    Matrix expected = Matrix::identity(5);
    expected *= cplx{std::pow(5.0, -alpha), 0.0};
    CHECK(max_abs_diff(p, expected) <= 1e-14);
  }
}

TEST_CASE("pure states are fixed points of fractional powers") {
  const cplx amps[3] = {cplx{0.6, 0.0}, cplx{0.0, 0.8}, cplx{0.0, 0.0}};
  const auto rho = DensityMatrix::pure(amps);
  for (double alpha : {0.25, 0.5, 0.9}) {
    CHECK(max_abs_diff(matrix_power(rho, alpha), rho.matrix()) <= 1e-12);
  }
}

TEST_CASE("diagonal fractional power matches entrywise powering") {
  const std::vector<double> lam = {0.75, 0.25};
  const auto rho = DensityMatrix::from_matrix(Matrix::diagonal(lam));
  const Matrix s = matrix_power(rho, 0.5);
  CHECK(s(0, 0).real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
  CHECK(s(1, 1).real() == doctest::Approx(std::sqrt(0.25)).epsilon(1e-14));
  CHECK(std::abs(s(0, 1)) <= 1e-15);
}

TEST_CASE("sqrt of the maximally mixed state") {
  const auto rho = DensityMatrix::maximally_mixed(4);
  const Matrix s = sqrt_density(rho);
  CHECK(max_abs_diff(s, cplx{0.5, 0.0} * Matrix::identity(4)) <= 1e-14);
  CHECK(trace_power(rho, 0.5) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("sqrt squares back to the state") {
  for (int d : {2, 4, 6}) {
    for (int rank = 1; rank <= d; ++rank) {
      const auto rho = random_density(d, rank, {5150, std::uint64_t(10 * d + rank)});
      const Matrix s = sqrt_density(rho);
      CHECK(max_abs_diff(s * s, rho.matrix()) <= 1e-10);
    }
  }
}

TEST_CASE("complementary powers compose to the state for full rank") {
  const auto rho = random_density(5, 5, {616, 3});
  for (double alpha : {0.3, 0.5, 0.7}) {
    const Matrix p = matrix_power(rho, alpha) * matrix_power(rho, 1.0 - alpha);
    CHECK(max_abs_diff(p, rho.matrix()) <= 1e-10);
  }
}

TEST_CASE("trace of a power equals the eigenvalue sum") {
  const auto rho = random_density(6, 4, {616, 4});
  const auto eig = eigh(rho.matrix());
  const auto lambda = clamp_psd_spectrum(eig.eigenvalues);
  for (double alpha : {0.3, 0.5, 0.8}) {
    double expected = 0.0;
    for (double l : lambda)
      if (l > 0.0) expected += std::pow(l, alpha);
    CHECK(trace_power(rho, alpha) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(matrix_power(rho, alpha).trace().real() ==
          doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("power exponent range is enforced") {
  const auto rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(matrix_power(rho, 0.0), Error);
  CHECK_THROWS_AS(matrix_power(rho, 1.5), Error);
}

}  // TEST_SUITE
