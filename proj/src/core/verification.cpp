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
#include "core/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/coherence.hpp"
#include "core/density.hpp"
#include "core/eigen.hpp"
#include "core/errors.hpp"
#include "core/matrix.hpp"
#include "core/measurements.hpp"
#include "core/operator_basis.hpp"
#include "core/rng.hpp"

namespace coh {

namespace {

constexpr double kAlphas[] = {0.3, 0.5, 0.7};

class Accumulator {
 public:
  explicit Accumulator(double tol_scale) : tol_scale_(tol_scale) {}

  void record(const std::string& name, double default_tol, double residual) {
    auto& entry = entries_[name];
    entry.default_tol = default_tol;
    entry.max_residual = std::max(entry.max_residual, residual);
    entry.count += 1;
    if (std::find(order_.begin(), order_.end(), name) == order_.end())
      order_.push_back(name);
  }

  VerifySummary summary() const {
    VerifySummary out;
    for (const auto& name : order_) {
      const auto& entry = entries_.at(name);
      out.identities.push_back({name, entry.max_residual,
                                entry.default_tol * tol_scale_, entry.count});
    }
    return out;
  }

 private:
  struct Entry {
    double default_tol = 0.0;
    double max_residual = 0.0;
    long count = 0;
  };
  double tol_scale_;
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// Q_alpha summed over all bands, i.e. (d+1) times the averaged coherence.
double mum_wyd_sum(const DensityMatrix& rho, const MumSet& mum, double alpha) {
  return avg_coherence_mum(rho, mum, alpha) * (mum.dim + 1);
}

struct DimFixtures {
  OperatorBasis basis;
  PartitionedBasis partition;
  ObservableSet observables;
  double t_star_mum = 0.0;
  double t_star_gsm = 0.0;
  std::vector<MumSet> mums;
  std::vector<GsmSet> gsms;
};

DimFixtures make_fixtures(int d) {
  DimFixtures fx{OperatorBasis::gell_mann(d),
                 PartitionedBasis::from_basis(OperatorBasis::gell_mann(d)),
                 ObservableSet::standard(d),
                 0.0,
                 0.0,
                 {},
                 {}};
  fx.t_star_mum = max_positive_t_mum(fx.partition);
  fx.t_star_gsm = max_positive_t_gsm(fx.basis);
  for (double frac : {0.3, 0.7, 1.0}) {
    fx.mums.push_back(build_mum(fx.partition, frac * fx.t_star_mum));
    fx.gsms.push_back(build_gsm(fx.basis, frac * fx.t_star_gsm));
  }
  return fx;
}

}  // namespace

bool VerifySummary::all_passed() const {
  for (const auto& id : identities)
    if (!id.passed()) return false;
  return true;
}

VerifySummary run_verification(const VerifyOptions& options) {
  if (options.dim_lo < 2 || options.dim_hi > 6 ||
      options.dim_lo > options.dim_hi)
    raise(ErrorCode::invalid_argument,
          "verification dimension range must lie within 2..6");
  if (options.trials < 1)
    raise(ErrorCode::invalid_argument, "at least one trial is required");
  if (!(options.tol > 0.0))
    raise(ErrorCode::invalid_argument, "tolerance must be positive");

  Accumulator acc(options.tol / 1e-9);

  for (int d = options.dim_lo; d <= options.dim_hi; ++d) {
    const auto fx = make_fixtures(d);
    const double dd = d;
    const double sqrt_d = std::sqrt(dd);

    // Measurement family conditions, once per (d, t).
    for (const auto& mum : fx.mums) {
      const auto report = verify_family(mum);
      acc.record("mum_conditions", 1e-10, report.max_residual());
      double kappa_hat = 0.0;
      for (const auto& povm : mum.povms)
        for (const auto& p : povm.elements)
          kappa_hat += trace_product(p, p).real();
      kappa_hat /= dd * (dd + 1.0);
      acc.record("mum_kappa_formula", 1e-12,
                 std::abs(kappa_hat - kappa_of(d, mum.t)));
    }
    for (const auto& gsm : fx.gsms) {
      const auto report = verify_family(gsm);
      acc.record("gsm_conditions", 1e-10, report.max_residual());
      double a_hat = 0.0;
      for (const auto& p : gsm.povm.elements)
        a_hat += trace_product(p, p).real();
      a_hat /= dd * dd;
      acc.record("gsm_a_formula", 1e-12, std::abs(a_hat - a_of(d, gsm.t)));
    }

    MubSet mub;
    bool have_mub = false;
    if (d == 2 || d == 3 || d == 5) {
      mub = build_mub_prime(d);
      have_mub = true;
      acc.record("mub_conditions", 1e-10, verify_family(mub).max_residual());
    }

    GsmSet sic;
    bool have_sic = false;
    if (d == 2 || d == 3) {
      sic = builtin_sic(d);
      have_sic = true;
      acc.record("sic_conditions", 1e-12, verify_family(sic).max_residual());
    }

    // Operator-basis sum rule sum_{b,n} F_{n,b}^2 = (d - 1/d) I.
    {
      Matrix sum_sq(d);
      for (const auto& f : fx.basis.ops()) sum_sq += f * f;
      sum_sq -= cplx{dd - 1.0 / dd, 0.0} * Matrix::identity(d);
      acc.record("basis_square_sum", 1e-10, sum_sq.max_abs());
    }

    // Eigensolver and sampler kernels.
    for (int k = 0; k < std::min(options.trials, 10); ++k) {
      const Matrix h =
          random_hermitian(d, {options.seed, 900000u + 100u * d + k});
      const auto eig = eigh(h);
      const double scale = std::max(1.0, h.max_abs());
      acc.record("eigh_reconstruction", 1e-11,
                 max_abs_diff(eig.reconstruct(), h) / scale);
      const Matrix u = haar_unitary(d, {options.seed, 910000u + 100u * d + k});
      Matrix gram = u.adjoint() * u;
      gram -= Matrix::identity(d);
      acc.record("haar_unitarity", 1e-11, gram.max_abs());
    }

    for (int trial = 0; trial < options.trials; ++trial) {
      const int rank = trial % d + 1;
      const RngSeed seed{options.seed,
                         static_cast<std::uint64_t>(d) * 1000u + trial};
      const auto rho = random_density(d, rank, seed);

      // sqrt and fractional power kernels.
      const Matrix s = sqrt_density(rho);
      acc.record("sqrt_squares_to_state", 1e-10,
                 max_abs_diff(s * s, rho.matrix()));
      if (rank == d) {
        const Matrix pa = matrix_power(rho, 0.3);
        const Matrix pb = matrix_power(rho, 0.7);
        acc.record("power_complement", 1e-10,
                   max_abs_diff(pa * pb, rho.matrix()));
      }

      const double tr_sqrt = trace_power(rho, 0.5);
      const double deficit_half = dd - tr_sqrt * tr_sqrt;

      // Closed forms for each family.
      for (const auto& mum : fx.mums) {
        const double brute = avg_coherence_mum(rho, mum);
        const double closed = closed_form_mum(rho, d, mum.kappa);
        acc.record("mum_closed_form", 1e-9, std::abs(brute - closed));
      }
      for (const auto& gsm : fx.gsms) {
        const double brute = avg_coherence_gsm(rho, gsm);
        const double closed = closed_form_gsm(rho, d, gsm.a);
        acc.record("gsm_closed_form", 1e-9, std::abs(brute - closed));
      }
      if (have_mub) {
        const auto [brute, closed] = c_mub(rho, mub);
        acc.record("mub_closed_form", 1e-9, std::abs(brute - closed));
      }
      if (have_sic) {
        const double brute = avg_coherence_gsm(rho, sic);
        acc.record("sic_closed_form", 1e-9,
                   std::abs(brute - closed_form_sic(rho)));
      }
      {
        const auto [brute, closed] = c_max(rho, fx.observables);
        acc.record("cmax_closed_form", 1e-9, std::abs(brute - closed));
      }

      // Generalized (alpha-indexed) identities.
      for (double alpha : kAlphas) {
        const double tr_a = trace_power(rho, alpha);
        const double tr_b = trace_power(rho, 1.0 - alpha);
        const double deficit = dd - tr_a * tr_b;

        const auto& mum = fx.mums[1];
        acc.record("mum_wyd_sum", 1e-9,
                   std::abs(mum_wyd_sum(rho, mum, alpha) -
                            (mum.kappa * dd - 1.0) / (dd - 1.0) * deficit));

        const auto& gsm = fx.gsms[1];
        acc.record("gsm_wyd_sum", 1e-9,
                   std::abs(avg_coherence_gsm(rho, gsm, alpha) -
                            (gsm.a * dd * dd * dd - 1.0) /
                                (dd * (dd * dd - 1.0)) * deficit));

        const auto [brute, closed] = q_alpha_uncertainty(rho, alpha, fx.observables);
        acc.record("observable_wyd_sum", 1e-9, std::abs(brute - closed));

        double basis_sum = 0.0;
        for (const auto& f : fx.basis.ops())
          basis_sum += wyd_information(rho, f, alpha);
        acc.record("basis_wyd_sum", 1e-9, std::abs(basis_sum - deficit));
      }

      // Band-operator quadratic trace sum, state independent.
      {
        const auto& mum = fx.mums[1];
        double sum = 0.0;
        for (const auto& povm : mum.povms) {
          for (const auto& p : povm.elements) {
            // Recover F_n^(b) = (P - I/d)/t to test the generator sum rule.
            Matrix f = p;
            f -= cplx{1.0 / dd, 0.0} * Matrix::identity(d);
            f *= cplx{1.0 / mum.t, 0.0};
            sum += trace_product(f * f, rho.matrix()).real();
          }
        }
        const double target = (1.0 + sqrt_d) * (1.0 + sqrt_d) * (dd * dd - 1.0);
        acc.record("band_square_trace_sum", 1e-8, std::abs(sum - target));
      }

      // Cross-relations.
      acc.record("mub_sic_link", 1e-12,
                 std::abs(closed_form_mub(rho) - dd * closed_form_sic(rho)));
      {
        const auto& mum = fx.mums[1];
        const auto& gsm = fx.gsms[1];
        const double factor = (mum.kappa * dd * dd - dd) /
                              (gsm.a * dd * dd * dd - 1.0);
        acc.record("mum_gsm_ratio", 1e-10,
                   std::abs(avg_coherence_mum(rho, mum) -
                            factor * avg_coherence_gsm(rho, gsm)));
      }

      // Ordering c_mum <= c_mub < c_max away from the maximally mixed state.
      if (rho.purity() > 1.0 / dd + 1e-6) {
        const double c_mum_v = avg_coherence_mum(rho, fx.mums[1]);
        const double c_mub_v = deficit_half / (dd + 1.0);
        const double c_max_v = deficit_half / dd;
        double violation = std::max(0.0, c_mum_v - c_mub_v);
        if (c_max_v - c_mub_v <= 0.0)
          violation = std::max(violation, c_mub_v - c_max_v);
        acc.record("ordering", 1e-10, violation);
      }

      // alpha symmetry and the alpha = 1/2 reduction of the generalized form.
      {
        const Matrix m = random_hermitian(d, {options.seed, seed.stream + 500000u});
        acc.record("wyd_alpha_symmetry", 1e-11,
                   std::abs(wyd_information(rho, m, 0.3) -
                            wyd_information(rho, m, 0.7)));
        acc.record("wyd_half_is_skew", 1e-11,
                   std::abs(wyd_information(rho, m, 0.5) -
                            skew_information(rho, m)));
      }

      // Closed forms depend on the spectrum only.
      {
        const Matrix u = haar_unitary(d, {options.seed, seed.stream + 600000u});
        const Matrix rotated = u * rho.matrix() * u.adjoint();
        const auto rho_rot = DensityMatrix::from_matrix(rotated);
        acc.record("unitary_covariance", 1e-10,
                   std::abs(closed_form_cmax(rho_rot) - closed_form_cmax(rho)));
      }
    }
  }
  return acc.summary();
}

}  // namespace coh
