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
#include <cstdio>
#include <string>
#include <vector>

#include <doctest.h>

#include "core/coherence.hpp"
#include "core/density.hpp"
#include "core/errors.hpp"
#include "core/measurements.hpp"
#include "core/operator_basis.hpp"
#include "core/rng.hpp"

using namespace coh;

namespace {

// Independent oracle: the commutator route -1/2 Tr([sqrt(rho), M]^2),
// evaluated through explicit matrix products rather than the expanded trace
// formula the implementation uses.
double skew_commutator_oracle(const DensityMatrix& rho, const Matrix& m) {
  const Matrix s = sqrt_density(rho);
  const Matrix c = s * m - m * s;
  return -0.5 * trace_product(c, c).real();
}

PartitionedBasis partition_of(int d) {
  return PartitionedBasis::from_basis(OperatorBasis::gell_mann(d));
}

Matrix plus_projector() {
  Matrix m(2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 0.5;
  return m;
}

}  // namespace

TEST_SUITE("skew_information") {

TEST_CASE("vanishes for the maximally mixed state and for the identity") {
  const auto mixed = DensityMatrix::maximally_mixed(4);
  const Matrix m = random_hermitian(4, {1, 1});
  CHECK(std::abs(skew_information(mixed, m)) <= 1e-13);

  const auto rho = random_density(4, 2, {2, 2});
  CHECK(std::abs(skew_information(rho, Matrix::identity(4))) <= 1e-13);
}

TEST_CASE("hand-computed projector pair") {
  // rho = |0><0|, M = |+><+|: Tr(M^2 rho) = 1/2, Tr(s M s M) = 1/4.
  const auto rho = DensityMatrix::pure_basis_state(2, 0);
  CHECK(skew_information(rho, plus_projector()) ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("agrees with the commutator route") {
  for (int d : {2, 3, 5}) {
    const auto rho = random_density(d, d, {3, std::uint64_t(d)});
    const Matrix m = random_hermitian(d, {4, std::uint64_t(d)});
    CHECK(skew_information(rho, m) ==
          doctest::Approx(skew_commutator_oracle(rho, m)).epsilon(1e-11));
  }
}

TEST_CASE("input validation") {
  const auto rho = DensityMatrix::maximally_mixed(2);
  Matrix non_hermitian(2);
  non_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(skew_information(rho, non_hermitian), Error);
  CHECK_THROWS_AS(skew_information(rho, Matrix::identity(3)), Error);
}

}  // TEST_SUITE

TEST_SUITE("wyd_information") {

TEST_CASE("alpha = 1/2 reduces to skew information") {
  for (int d : {2, 4}) {
    const auto rho = random_density(d, d - 1, {5, std::uint64_t(d)});
    const Matrix m = random_hermitian(d, {6, std::uint64_t(d)});
    CHECK(std::abs(wyd_information(rho, m, 0.5) - skew_information(rho, m)) <=
          1e-11);
  }
}

TEST_CASE("diagonal state against the entrywise-power oracle") {
  // For diagonal rho the fractional powers are entrywise, so the whole
  // quantity reduces to scalar arithmetic with std::pow.
  const std::vector<double> lam = {0.75, 0.25};
  const auto rho = DensityMatrix::from_matrix(Matrix::diagonal(lam));
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2);
  m(0, 1) = s;
  m(1, 0) = s;

  const double alpha = 0.3;
  // Tr(M^2 rho) = 1/2; Tr(rho^a M rho^(1-a) M) crosses the two levels.
  const double exchange =
      s * s * (std::pow(0.75, alpha) * std::pow(0.25, 1.0 - alpha) +
               std::pow(0.25, alpha) * std::pow(0.75, 1.0 - alpha));
  const double expected = 0.5 - exchange;
  CHECK(wyd_information(rho, m, alpha) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("symmetric under alpha <-> 1 - alpha") {
  const auto rho = random_density(4, 4, {7, 1});
  const Matrix m = random_hermitian(4, {8, 1});
  for (double alpha : {0.1, 0.25, 0.4}) {
    CHECK(std::abs(wyd_information(rho, m, alpha) -
                   wyd_information(rho, m, 1.0 - alpha)) <= 1e-11);
  }
}

TEST_CASE("maximally mixed state has zero uncertainty") {
  const auto mixed = DensityMatrix::maximally_mixed(3);
  const Matrix m = random_hermitian(3, {9, 1});
  CHECK(std::abs(wyd_information(mixed, m, 0.3)) <= 1e-13);
}

TEST_CASE("alpha outside (0, 1) is rejected") {
  const auto rho = DensityMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(wyd_information(rho, Matrix::identity(2), 0.0), Error);
  CHECK_THROWS_AS(wyd_information(rho, Matrix::identity(2), 1.0), Error);
}

}  // TEST_SUITE

TEST_SUITE("q_measure") {

TEST_CASE("trivial cases vanish") {
  const auto mum = build_mum(partition_of(3), 0.05);
  CHECK(std::abs(q_measure(DensityMatrix::maximally_mixed(3),
                           mum.povms[0])) <= 1e-12);

  Povm trivial{2, {Matrix::identity(2)}};
  CHECK(std::abs(q_measure(DensityMatrix::pure_basis_state(2, 0), trivial)) <=
        1e-13);
}

TEST_CASE("matches element-by-element resummation with the oracle") {
  const auto mum = build_mum(partition_of(3), 0.05);
  const auto rho = random_density(3, 2, {10, 3});
  for (const auto& povm : mum.povms) {
    double resummed = 0.0;
    for (const auto& p : povm.elements)
      resummed += skew_commutator_oracle(rho, p);
    CHECK(q_measure(rho, povm) == doctest::Approx(resummed).epsilon(1e-11));
  }
}

}  // TEST_SUITE

TEST_SUITE("mum_coherence") {

TEST_CASE("maximally mixed gives zero") {
  const auto mum = build_mum(partition_of(4), 0.02);
  CHECK(std::abs(avg_coherence_mum(DensityMatrix::maximally_mixed(4), mum)) <=
        1e-12);
}

TEST_CASE("brute force equals the closed form") {
  const auto mum = build_mum(partition_of(3), 0.05);
  for (int trial = 0; trial < 8; ++trial) {
    const auto rho = random_density(3, trial % 3 + 1, {11, std::uint64_t(trial)});
    const double brute = avg_coherence_mum(rho, mum);
    const double closed = closed_form_mum(rho, 3, mum.kappa);
    CHECK(std::abs(brute - closed) <= 1e-9);
  }
}

TEST_CASE("generalized sum matches the efficiency-scaled identity") {
  const auto mum = build_mum(partition_of(3), 0.05);
  const auto rho = random_density(3, 3, {12, 5});
  for (double alpha : {0.3, 0.7}) {
    const double sum = avg_coherence_mum(rho, mum, alpha) * 4;
    const double deficit =
        3.0 - trace_power(rho, alpha) * trace_power(rho, 1.0 - alpha);
    const double expected = (mum.kappa * 3.0 - 1.0) / 2.0 * deficit;
    CHECK(std::abs(sum - expected) <= 1e-9);
  }
}

TEST_CASE("closed form endpoints") {
  const auto pure = DensityMatrix::pure_basis_state(4, 1);
  CHECK(closed_form_mum(pure, 4, 1.0) == doctest::Approx(0.6).epsilon(1e-12));

  const auto mixed = DensityMatrix::maximally_mixed(4);
  CHECK(std::abs(closed_form_mum(mixed, 4, 0.5)) <= 1e-12);

  // kappa = 1 coincides with the projective average.
  const auto rho = random_density(4, 2, {13, 1});
  CHECK(closed_form_mum(rho, 4, 1.0) ==
        doctest::Approx(closed_form_mub(rho)).epsilon(1e-12));
}

TEST_CASE("kappa outside (1/d, 1] is rejected") {
  const auto rho = DensityMatrix::maximally_mixed(3);
  CHECK_THROWS_AS(closed_form_mum(rho, 3, 1.0 / 3), Error);
  CHECK_THROWS_AS(closed_form_mum(rho, 3, 1.2), Error);
}

}  // TEST_SUITE

TEST_SUITE("gsm_coherence") {

TEST_CASE("brute force equals the closed form") {
  const auto gsm = build_gsm(OperatorBasis::gell_mann(3), 0.005);
  for (int trial = 0; trial < 6; ++trial) {
    const auto rho = random_density(3, trial % 3 + 1, {14, std::uint64_t(trial)});
    CHECK(std::abs(avg_coherence_gsm(rho, gsm) -
                   closed_form_gsm(rho, 3, gsm.a)) <= 1e-9);
  }
}

TEST_CASE("generalized sum at alpha = 0.7") {
  const auto gsm = build_gsm(OperatorBasis::gell_mann(3), 0.005);
  const auto rho = random_density(3, 3, {15, 2});
  const double sum = avg_coherence_gsm(rho, gsm, 0.7);
  const double deficit =
      3.0 - trace_power(rho, 0.7) * trace_power(rho, 0.3);
  const double expected = (gsm.a * 27.0 - 1.0) / 24.0 * deficit;
  CHECK(std::abs(sum - expected) <= 1e-9);
}

TEST_CASE("rank-one limit endpoints") {
  const auto pure = DensityMatrix::pure_basis_state(3, 0);
  CHECK(closed_form_gsm(pure, 3, 1.0 / 9) ==
        doctest::Approx(2.0 / 12).epsilon(1e-12));
  CHECK(std::abs(closed_form_gsm(DensityMatrix::maximally_mixed(3), 3,
                                 1.0 / 9)) <= 1e-12);
  const auto rho = random_density(3, 2, {16, 1});
  CHECK(closed_form_gsm(rho, 3, 1.0 / 9) ==
        doctest::Approx(closed_form_sic(rho)).epsilon(1e-12));
}

TEST_CASE("a outside (1/d^3, 1/d^2] is rejected") {
  const auto rho = DensityMatrix::maximally_mixed(3);
  CHECK_THROWS_AS(closed_form_gsm(rho, 3, 1.0 / 27), Error);
  CHECK_THROWS_AS(closed_form_gsm(rho, 3, 0.2), Error);
}

}  // TEST_SUITE

TEST_SUITE("mub_and_observables") {

TEST_CASE("mub average: pure states hit (d-1)/(d+1)") {
  for (int d : {2, 3, 5, 7}) {
    const auto mub = build_mub_prime(d);
    const auto pure = random_density(d, 1, {17, std::uint64_t(d)});
    const auto [brute, closed] = c_mub(pure, mub);
    CHECK(brute == doctest::Approx((d - 1.0) / (d + 1.0)).epsilon(1e-9));
    CHECK(closed == doctest::Approx((d - 1.0) / (d + 1.0)).epsilon(1e-9));
  }
}

TEST_CASE("mub average: brute equals closed for mixed states") {
  for (int d : {2, 3, 5, 7}) {
    const auto mub = build_mub_prime(d);
    const auto rho = random_density(d, d, {18, std::uint64_t(d)});
    const auto [brute, closed] = c_mub(rho, mub);
    CHECK(std::abs(brute - closed) <= 1e-9);
  }
}

TEST_CASE("maximal coherence endpoints and identity") {
  const auto obs5 = ObservableSet::standard(5);
  const auto pure = random_density(5, 1, {19, 1});
  const auto [brute_p, closed_p] = c_max(pure, obs5);
  CHECK(brute_p == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(closed_p == doctest::Approx(0.8).epsilon(1e-9));

  const auto mixed = DensityMatrix::maximally_mixed(5);
  const auto [brute_m, closed_m] = c_max(mixed, obs5);
  CHECK(std::abs(brute_m) <= 1e-10);
  CHECK(std::abs(closed_m) <= 1e-10);

  const auto rho = random_density(5, 3, {20, 1});
  const auto [brute, closed] = c_max(rho, obs5);
  CHECK(std::abs(brute - closed) <= 1e-9);
}

TEST_CASE("averaged WYD uncertainty identity") {
  const auto obs = ObservableSet::standard(4);
  const auto mixed = DensityMatrix::maximally_mixed(4);
  const auto [brute_m, closed_m] = q_alpha_uncertainty(mixed, 0.4, obs);
  CHECK(std::abs(brute_m) <= 1e-12);
  CHECK(std::abs(closed_m) <= 1e-12);

  const auto pure = DensityMatrix::pure_basis_state(4, 2);
  const auto [brute_p, closed_p] = q_alpha_uncertainty(pure, 0.5, obs);
  CHECK(brute_p == doctest::Approx(3.0).epsilon(1e-11));

  const auto rho = random_density(4, 4, {21, 1});
  const auto [brute, closed] = q_alpha_uncertainty(rho, 0.3, obs);
  CHECK(std::abs(brute - closed) <= 1e-9);
}

TEST_CASE("basis WYD sum matches d - Tr(rho^a) Tr(rho^(1-a))") {
  const auto basis = OperatorBasis::gell_mann(4);
  const auto rho = random_density(4, 3, {22, 1});
  for (double alpha : {0.3, 0.5, 0.7}) {
    double sum = 0.0;
    for (const auto& f : basis.ops()) sum += wyd_information(rho, f, alpha);
    const double expected =
        4.0 - trace_power(rho, alpha) * trace_power(rho, 1.0 - alpha);
    CHECK(std::abs(sum - expected) <= 1e-9);
  }
}

TEST_CASE("band generator quadratic sum is state independent") {
  for (int d : {2, 3, 5}) {
    const auto part = partition_of(d);
    const auto mum = build_mum(part, 0.4 * max_positive_t_mum(part));
    const auto rho = random_density(d, d, {23, std::uint64_t(d)});
    double sum = 0.0;
    for (const auto& povm : mum.povms) {
      for (const auto& p : povm.elements) {
        Matrix f = p;
        f -= cplx{1.0 / d, 0.0} * Matrix::identity(d);
        f *= cplx{1.0 / mum.t, 0.0};
        sum += trace_product(f * f, rho.matrix()).real();
      }
    }
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    const double expected = (1.0 + sqrt_d) * (1.0 + sqrt_d) *
                            (static_cast<double>(d) * d - 1.0);
    CHECK(std::abs(sum - expected) <= 1e-8);
  }
}

}  // TEST_SUITE

TEST_SUITE("c_u_monte_carlo") {

TEST_CASE("maximally mixed estimate is numerically zero") {
  const auto cu = c_u_monte_carlo(DensityMatrix::maximally_mixed(3), 200, {24, 0});
  CHECK(std::abs(cu.estimate) <= 1e-13);
  CHECK(cu.z_score() == 0.0);
}

TEST_CASE("pure state converges to the closed form") {
  const auto pure = DensityMatrix::pure_basis_state(3, 0);
  const auto cu = c_u_monte_carlo(pure, 10000, {25, 0});
  CHECK(cu.closed == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(cu.estimate - cu.closed) <= 3.0 * cu.std_error);
}

TEST_CASE("mixed state converges to the closed form") {
  const auto rho = random_density(2, 2, {26, 1});
  const auto cu = c_u_monte_carlo(rho, 10000, {26, 100});
  CHECK(std::abs(cu.estimate - cu.closed) <= 3.0 * cu.std_error);
}

TEST_CASE("deterministic per seed and sample floor enforced") {
  const auto rho = random_density(2, 1, {27, 1});
  const auto a = c_u_monte_carlo(rho, 500, {28, 0});
  const auto b = c_u_monte_carlo(rho, 500, {28, 0});
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK_THROWS_AS(c_u_monte_carlo(rho, 99, {28, 0}), Error);
}

}  // TEST_SUITE

TEST_SUITE("relations_report") {

TEST_CASE("pure qutrit closed-form values and the d * c_sic link") {
  const auto mub = build_mub_prime(3);
  const auto sic = builtin_sic(3);
  const auto pure = random_density(3, 1, {29, 1});

  ReportRequest request;
  request.mub = &mub;
  request.sic = &sic;
  request.state_id = "pure-qutrit";
  const auto report = relations_report(pure, request);

  CHECK(*report.find("c_mub")->closed == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(*report.find("c_max")->closed ==
        doctest::Approx(2.0 / 3).epsilon(1e-9));
  CHECK(*report.find("c_sic")->closed ==
        doctest::Approx(1.0 / 6).epsilon(1e-9));
  CHECK(*report.find("c_mub")->brute == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(*report.find("c_sic")->brute ==
        doctest::Approx(1.0 / 6).epsilon(1e-9));

  for (const auto& [name, rel] : report.relations) {
    if (name == "c_mub_eq_d_c_sic") CHECK(rel.residual <= 1e-12);
  }
  CHECK(report.ordering_ok);
  CHECK_FALSE(report.ordering_degenerate);
}

TEST_CASE("maximally mixed reports degenerate ordering, all zeros") {
  const auto mub = build_mub_prime(3);
  ReportRequest request;
  request.mub = &mub;
  const auto report = relations_report(DensityMatrix::maximally_mixed(3), request);
  CHECK(report.ordering_degenerate);
  CHECK(report.ordering_ok);
  for (const auto& [name, value] : report.quantities) {
    if (value.brute) CHECK(std::abs(*value.brute) <= 1e-10);
    if (value.closed) CHECK(std::abs(*value.closed) <= 1e-10);
  }
}

TEST_CASE("mum and gsm relations at kappa < 1") {
  const auto part = partition_of(3);
  const auto mum = build_mum(part, 0.05);
  const auto gsm = build_gsm(part.flat(), 0.005);
  const auto rho = random_density(3, 2, {30, 1});

  ReportRequest request;
  request.mum = &mum;
  request.gsm = &gsm;
  const auto report = relations_report(rho, request);

  // c_mum/c_mub = (kappa d - 1)/(d - 1) via the closed forms.
  const double expected_ratio = (mum.kappa * 3.0 - 1.0) / 2.0;
  CHECK(*report.find("c_mum")->closed ==
        doctest::Approx(expected_ratio * *report.find("c_mub")->closed)
            .epsilon(1e-10));

  for (const auto& [name, rel] : report.relations) {
    if (name == "c_mum_vs_c_gsm") CHECK(rel.residual <= 1e-10);
    if (name == "c_mum_vs_c_mub") CHECK(rel.residual <= 1e-10);
    if (name == "c_sic_vs_c_max") CHECK(rel.residual <= 1e-12);
  }
  CHECK(report.find("c_mum")->residual.value() <= 1e-9);
  CHECK(report.find("c_gsm")->residual.value() <= 1e-9);
  CHECK(report.ordering_ok);
}

TEST_CASE("strict ordering away from the maximally mixed state") {
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = random_density(4, trial % 4 + 1, {31, std::uint64_t(trial)});
    if (rho.purity() <= 0.25 + 1e-6) continue;
    const double mub_closed = closed_form_mub(rho);
    const double max_closed = closed_form_cmax(rho);
    CHECK(max_closed > mub_closed);
  }
}

TEST_CASE("closed forms are unitarily covariant") {
  const auto rho = random_density(4, 3, {32, 1});
  const Matrix u = haar_unitary(4, {33, 1});
  const auto rotated =
      DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
  CHECK(std::abs(closed_form_cmax(rotated) - closed_form_cmax(rho)) <= 1e-10);
  CHECK(std::abs(closed_form_mub(rotated) - closed_form_mub(rho)) <= 1e-10);
}

TEST_CASE("asymptotic efficiency ratio (formula only)") {
  const double d = 1000.0;
  for (double kappa : {0.3, 0.7, 1.0}) {
    const double ratio = d * (kappa * d - 1.0) / (d * d - 1.0);
    CHECK(std::abs(ratio - kappa) <= 2.0 / d);
  }
}

TEST_CASE("every reported coherence is non-negative") {
  const auto part = partition_of(3);
  const auto mum = build_mum(part, 0.05);
  const auto gsm = build_gsm(part.flat(), 0.005);
  const auto mub = build_mub_prime(3);
  const auto sic = builtin_sic(3);
  for (int trial = 0; trial < 6; ++trial) {
    const auto rho = random_density(3, trial % 3 + 1, {34, std::uint64_t(trial)});
    ReportRequest request;
    request.mum = &mum;
    request.gsm = &gsm;
    request.mub = &mub;
    request.sic = &sic;
    const auto report = relations_report(rho, request);
    for (const auto& [name, value] : report.quantities) {
      if (value.brute) CHECK(*value.brute >= -1e-10);
      if (value.closed) CHECK(*value.closed >= -1e-10);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("figure1") {

TEST_CASE("curve values and ordering") {
  const std::string csv = figure1_csv(12);
  REQUIRE(csv.rfind("d,c_max,c_mub,c_sic\n", 0) == 0);

  // First data row is d = 2: 0.5, 1/3, 1/6.
  const auto line_end = csv.find('\n', csv.find('\n') + 1);
  const std::string row2 = csv.substr(csv.find('\n') + 1,
                                      line_end - csv.find('\n') - 1);
  double d_val = 0.0, cmax = 0.0, cmub = 0.0, csic = 0.0;
  REQUIRE(std::sscanf(row2.c_str(), "%lf,%lf,%lf,%lf", &d_val, &cmax, &cmub,
                      &csic) == 4);
  CHECK(d_val == 2.0);
  CHECK(cmax == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cmub == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(csic == doctest::Approx(1.0 / 6).epsilon(1e-12));

  CHECK_THROWS_AS(figure1_csv(1), Error);
}

}  // TEST_SUITE
