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
#include "core/coherence.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/errors.hpp"

namespace coh {

namespace {

// Round-off window in which a mathematically non-negative skew value is
// flushed to zero. Larger negatives are returned untouched so they surface
// in residuals instead of being hidden.
double clamp_skew(double value) {
  return (value < 0.0 && value >= -1e-12) ? 0.0 : value;
}

// Eigendecomposition of rho plus the fractional powers for one alpha,
// computed once and reused across all measurement elements of a sum.
class StatePowers {
 public:
  StatePowers(const DensityMatrix& rho, double alpha) : rho_(&rho.matrix()) {
    if (!(alpha > 0.0 && alpha < 1.0))
      raise(ErrorCode::bad_alpha, "alpha must lie in (0, 1)");
    const auto eig = eigh(*rho_);
    auto lambda = clamp_psd_spectrum(eig.eigenvalues);

    auto powered = lambda;
    for (double& l : powered) l = l > 0.0 ? std::pow(l, alpha) : 0.0;
    pow_alpha_ = assemble_from_spectrum(eig, powered);
    trace_alpha_ = 0.0;
    for (double p : powered) trace_alpha_ += p;

    if (alpha == 0.5) {
      pow_complement_ = pow_alpha_;
      trace_complement_ = trace_alpha_;
    } else {
      powered = lambda;
      for (double& l : powered) l = l > 0.0 ? std::pow(l, 1.0 - alpha) : 0.0;
      pow_complement_ = assemble_from_spectrum(eig, powered);
      trace_complement_ = 0.0;
      for (double p : powered) trace_complement_ += p;
    }
  }

  // I_alpha(rho, M) = Tr(M^2 rho) - Tr(rho^alpha M rho^(1-alpha) M).
  double wyd(const Matrix& m) const {
    const Matrix m_rho = m * (*rho_);
    const double quadratic = trace_product(m, m_rho).real();
    const Matrix am = pow_alpha_ * m;
    const Matrix bm = pow_complement_ * m;
    const double exchange = trace_product(am, bm).real();
    return clamp_skew(quadratic - exchange);
  }

  double trace_alpha() const { return trace_alpha_; }
  double trace_complement() const { return trace_complement_; }

 private:
  const Matrix* rho_;
  Matrix pow_alpha_;
  Matrix pow_complement_;
  double trace_alpha_ = 0.0;
  double trace_complement_ = 0.0;
};

void require_hermitian_observable(const Matrix& m) {
  const double err = m.hermiticity_error();
  if (err > 1e-12) {
    std::ostringstream msg;
    msg << "measurement operator is not Hermitian: max |M - M^dagger| = " << err;
    raise(ErrorCode::not_hermitian, msg.str());
  }
}

// d - (Tr sqrt(rho))^2, the state-dependent factor of every closed form.
double sqrt_deficit(const DensityMatrix& rho) {
  const double tr_sqrt = trace_power(rho, 0.5);
  return rho.dim() - tr_sqrt * tr_sqrt;
}

}  // namespace

double skew_information(const DensityMatrix& rho, const Matrix& m) {
  require_same_dim(rho.matrix(), m, "skew information");
  require_hermitian_observable(m);
  return StatePowers(rho, 0.5).wyd(m);
}

double wyd_information(const DensityMatrix& rho, const Matrix& m, double alpha) {
  require_same_dim(rho.matrix(), m, "generalized skew information");
  require_hermitian_observable(m);
  return StatePowers(rho, alpha).wyd(m);
}

double q_measure(const DensityMatrix& rho, const Povm& povm, double alpha) {
  if (povm.dim != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and POVM dimensions differ");
  const StatePowers powers(rho, alpha);
  double total = 0.0;
  for (const auto& p : povm.elements) total += powers.wyd(p);
  return total;
}

double avg_coherence_mum(const DensityMatrix& rho, const MumSet& mum,
                         double alpha) {
  if (mum.dim != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and measurement dimensions differ");
  const StatePowers powers(rho, alpha);
  double total = 0.0;
  for (const auto& povm : mum.povms)
    for (const auto& p : povm.elements) total += powers.wyd(p);
  return total / (mum.dim + 1);
}

double closed_form_mum(const DensityMatrix& rho, int dim, double kappa) {
  // The upper gate leaves room for kappa(t*) landing on 1 up to round-off.
  if (!(kappa > 1.0 / dim && kappa <= 1.0 + 1e-9))
    raise(ErrorCode::bad_efficiency, "kappa must lie in (1/d, 1]");
  const double d = dim;
  return (kappa * d - 1.0) / (d * d - 1.0) * sqrt_deficit(rho);
}

double avg_coherence_gsm(const DensityMatrix& rho, const GsmSet& gsm,
                         double alpha) {
  if (gsm.dim != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and measurement dimensions differ");
  return q_measure(rho, gsm.povm, alpha);
}

double closed_form_gsm(const DensityMatrix& rho, int dim, double a) {
  const double d = dim;
  if (!(a > 1.0 / (d * d * d) && a <= 1.0 / (d * d) + 1e-9))
    raise(ErrorCode::bad_efficiency, "a must lie in (1/d^3, 1/d^2]");
  return (a * d * d * d - 1.0) / (d * (d * d - 1.0)) * sqrt_deficit(rho);
}

double avg_coherence_mub(const DensityMatrix& rho, const MubSet& mub,
                         double alpha) {
  if (mub.dim != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and MUB dimensions differ");
  const int d = mub.dim;
  const StatePowers powers(rho, alpha);

  double total = 0.0;
  for (const auto& basis : mub.bases) {
    for (int col = 0; col < d; ++col) {
      Matrix proj(d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          proj(r, c) = basis(r, col) * std::conj(basis(c, col));
      total += powers.wyd(proj);
    }
  }
  return total / (d + 1);
}

std::pair<double, double> c_mub(const DensityMatrix& rho, const MubSet& mub) {
  return {avg_coherence_mub(rho, mub, 0.5), closed_form_mub(rho)};
}

double closed_form_mub(const DensityMatrix& rho) {
  return sqrt_deficit(rho) / (rho.dim() + 1);
}

double closed_form_sic(const DensityMatrix& rho) {
  const double d = rho.dim();
  return sqrt_deficit(rho) / (d * (d + 1.0));
}

double closed_form_cmax(const DensityMatrix& rho) {
  return sqrt_deficit(rho) / rho.dim();
}

std::pair<double, double> c_max(const DensityMatrix& rho,
                                const ObservableSet& obs) {
  if (obs.dim() != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and observable set dimensions differ");
  const StatePowers powers(rho, 0.5);
  double total = 0.0;
  for (const auto& h : obs.ops()) total += powers.wyd(h);
  return {total / rho.dim(), closed_form_cmax(rho)};
}

std::pair<double, double> q_alpha_uncertainty(const DensityMatrix& rho,
                                              double alpha,
                                              const ObservableSet& obs) {
  if (obs.dim() != rho.dim())
    raise(ErrorCode::dim_mismatch, "state and observable set dimensions differ");
  const StatePowers powers(rho, alpha);
  double total = 0.0;
  for (const auto& h : obs.ops()) total += powers.wyd(h);
  const double closed =
      rho.dim() - powers.trace_alpha() * powers.trace_complement();
  return {total, closed};
}

double CuEstimate::z_score() const {
  if (std_error == 0.0 || std::abs(estimate - closed) <= 1e-12) return 0.0;
  return (estimate - closed) / std_error;
}

CuEstimate c_u_monte_carlo(const DensityMatrix& rho, int samples, RngSeed seed) {
  if (samples < 100)
    raise(ErrorCode::invalid_argument, "at least 100 samples are required");

  const int d = rho.dim();
  const Matrix& rho_m = rho.matrix();
  const Matrix s = sqrt_density(rho);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Matrix u = haar_unitary(d, {seed.seed, seed.stream + 1 + i});
    double q = 0.0;
    for (int col = 0; col < d; ++col) {
      // <u|rho|u> - <u|sqrt(rho)|u>^2 for the rank-one projector onto column
      // `col`; the quadratic forms replace the full wyd trace evaluation.
      cplx quad_rho{0.0, 0.0};
      cplx quad_s{0.0, 0.0};
      for (int r = 0; r < d; ++r) {
        cplx rho_u{0.0, 0.0};
        cplx s_u{0.0, 0.0};
        for (int c = 0; c < d; ++c) {
          rho_u += rho_m(r, c) * u(c, col);
          s_u += s(r, c) * u(c, col);
        }
        quad_rho += std::conj(u(r, col)) * rho_u;
        quad_s += std::conj(u(r, col)) * s_u;
      }
      q += clamp_skew(quad_rho.real() - quad_s.real() * quad_s.real());
    }
    sum += q;
    sum_sq += q * q;
  }

  CuEstimate out;
  out.estimate = sum / samples;
  const double var =
      std::max(0.0, (sum_sq - sum * sum / samples) / (samples - 1));
  out.std_error = std::sqrt(var / samples);
  out.closed = closed_form_mub(rho);
  return out;
}

const CoherenceReport::Value* CoherenceReport::find(
    const std::string& name) const {
  for (const auto& [key, value] : quantities)
    if (key == name) return &value;
  return nullptr;
}

CoherenceReport relations_report(const DensityMatrix& rho,
                                 const ReportRequest& request) {
  const int d = rho.dim();
  const double dd = d;
  CoherenceReport report;
  report.dim = d;
  report.alpha = request.alpha;
  report.state_id = request.state_id;

  // The alpha-generalized closed forms share the factor
  // d - Tr(rho^alpha) Tr(rho^(1-alpha)); at alpha = 1/2 it is the
  // (Tr sqrt(rho))^2 deficit of the skew-information forms.
  const StatePowers powers(rho, request.alpha);
  const double deficit =
      dd - powers.trace_alpha() * powers.trace_complement();

  auto add = [&](const std::string& name, CoherenceReport::Value v) {
    if (v.brute && v.closed) v.residual = std::abs(*v.brute - *v.closed);
    report.quantities.emplace_back(name, v);
  };

  CoherenceReport::Value v_mum;
  if (request.mum) {
    report.kappa = request.mum->kappa;
    v_mum.brute = avg_coherence_mum(rho, *request.mum, request.alpha);
    v_mum.closed = (request.mum->kappa * dd - 1.0) / (dd * dd - 1.0) * deficit;
  }
  add("c_mum", v_mum);

  CoherenceReport::Value v_mub;
  v_mub.closed = deficit / (dd + 1.0);
  if (request.mub)
    v_mub.brute = avg_coherence_mub(rho, *request.mub, request.alpha);
  add("c_mub", v_mub);

  CoherenceReport::Value v_max;
  v_max.closed = deficit / dd;
  {
    const auto obs = ObservableSet::standard(d);
    double total = 0.0;
    for (const auto& h : obs.ops()) total += powers.wyd(h);
    v_max.brute = total / dd;
  }
  add("c_max", v_max);

  CoherenceReport::Value v_sic;
  v_sic.closed = deficit / (dd * (dd + 1.0));
  if (request.sic)
    v_sic.brute = q_measure(rho, request.sic->povm, request.alpha);
  add("c_sic", v_sic);

  CoherenceReport::Value v_gsm;
  if (request.gsm) {
    report.a = request.gsm->a;
    v_gsm.brute = q_measure(rho, request.gsm->povm, request.alpha);
    v_gsm.closed = (request.gsm->a * dd * dd * dd - 1.0) /
                   (dd * (dd * dd - 1.0)) * deficit;
  }
  add("c_gsm", v_gsm);

  CoherenceReport::Value v_cu;
  v_cu.closed = deficit / (dd + 1.0);
  if (request.cu_samples > 0 && request.alpha == 0.5) {
    const auto cu = c_u_monte_carlo(rho, request.cu_samples, request.seed);
    v_cu.estimate = cu.estimate;
    v_cu.std_error = cu.std_error;
    report.samples = request.cu_samples;
  }
  add("c_u", v_cu);

  auto relate = [&](const std::string& name, double lhs, double rhs) {
    report.relations.emplace_back(
        name, CoherenceReport::Relation{lhs, rhs, std::abs(lhs - rhs)});
  };

  relate("c_mub_eq_d_c_sic", *report.find("c_mub")->closed,
         dd * *report.find("c_sic")->closed);
  relate("c_sic_vs_c_max", (dd + 1.0) * *report.find("c_sic")->closed,
         *report.find("c_max")->closed);
  if (request.mum) {
    relate("c_mum_vs_c_max", *report.find("c_mum")->closed,
           dd * (report.kappa.value() * dd - 1.0) / (dd * dd - 1.0) *
               *report.find("c_max")->closed);
    relate("c_mum_vs_c_mub", *report.find("c_mum")->closed,
           (report.kappa.value() * dd - 1.0) / (dd - 1.0) *
               *report.find("c_mub")->closed);
  }
  if (request.mum && request.gsm) {
    const double factor = (report.kappa.value() * dd * dd - dd) /
                          (report.a.value() * dd * dd * dd - 1.0);
    relate("c_mum_vs_c_gsm", *report.find("c_mum")->brute,
           factor * *report.find("c_gsm")->brute);
  }

  // Ordering c_mum <= c_mub < c_max is vacuous at the maximally mixed point
  // where every quantity is ~0; report it as degenerate instead of violated.
  if (rho.purity() <= 1.0 / dd + 1e-6) {
    report.ordering_degenerate = true;
    report.ordering_ok = true;
  } else {
    const double mub_val = v_mub.brute.value_or(*v_mub.closed);
    const double max_val = v_max.brute.value_or(*v_max.closed);
    report.ordering_ok = max_val - mub_val > 0.0;
    if (v_mum.brute)
      report.ordering_ok =
          report.ordering_ok && *v_mum.brute <= mub_val + 1e-10;
  }
  return report;
}

std::string figure1_csv(int dmax) {
  if (dmax < 2)
    raise(ErrorCode::invalid_argument, "dmax must be at least 2");
  std::string csv = "d,c_max,c_mub,c_sic\n";
  char line[128];
  for (int d = 2; d <= dmax; ++d) {
    const double dd = d;
    std::snprintf(line, sizeof line, "%d,%.15g,%.15g,%.15g\n", d,
                  (dd - 1.0) / dd, (dd - 1.0) / (dd + 1.0),
                  (dd - 1.0) / (dd * (dd + 1.0)));
    csv += line;
  }
  return csv;
}

}  // namespace coh
