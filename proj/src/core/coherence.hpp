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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/density.hpp"
#include "core/measurements.hpp"
#include "core/operator_basis.hpp"
#include "core/rng.hpp"

namespace coh {

/// Skew information I(rho, M) = Tr(M^2 rho) - Tr(sqrt(rho) M sqrt(rho) M),
/// equivalently -1/2 Tr([sqrt(rho), M]^2). Non-negative; round-off negatives
/// within -1e-12 are clamped to zero.
double skew_information(const DensityMatrix& rho, const Matrix& m);

/// Generalized skew information I_alpha(rho, M) = Tr(M^2 rho) -
/// Tr(rho^alpha M rho^(1-alpha) M) for alpha in (0, 1); alpha = 1/2 recovers
/// skew_information.
double wyd_information(const DensityMatrix& rho, const Matrix& m, double alpha);

/// Measurement-based coherence Q(rho, P) = sum_i I_alpha(rho, P_i). The
/// eigendecomposition of rho is computed once and shared across elements.
double q_measure(const DensityMatrix& rho, const Povm& povm, double alpha = 0.5);

/// Average coherence over the d+1 unbiased measurements:
/// (1/(d+1)) sum_b Q(rho, P^(b)).
double avg_coherence_mum(const DensityMatrix& rho, const MumSet& mum,
                         double alpha = 0.5);

/// Closed form (kappa d - 1)/(d^2 - 1) * [d - (Tr sqrt(rho))^2].
double closed_form_mum(const DensityMatrix& rho, int dim, double kappa);

/// Coherence of a general SIC measurement: Q(rho, P) summed over all d^2
/// elements (no normalization).
double avg_coherence_gsm(const DensityMatrix& rho, const GsmSet& gsm,
                         double alpha = 0.5);

/// Closed form (a d^3 - 1)/(d (d^2 - 1)) * [d - (Tr sqrt(rho))^2].
double closed_form_gsm(const DensityMatrix& rho, int dim, double a);

/// Brute-force MUB average coherence over the rank-one projective
/// measurements, (1/(d+1)) sum_m Q(rho, B_m).
double avg_coherence_mub(const DensityMatrix& rho, const MubSet& mub,
                         double alpha = 0.5);

/// MUB average coherence, brute force and the closed form
/// (1/(d+1)) [d - (Tr sqrt(rho))^2].
std::pair<double, double> c_mub(const DensityMatrix& rho, const MubSet& mub);

double closed_form_mub(const DensityMatrix& rho);
double closed_form_sic(const DensityMatrix& rho);
double closed_form_cmax(const DensityMatrix& rho);

/// Maximal coherence (1/d) sum_i I(rho, H_i) over a complete orthogonal
/// observable set, with the closed form (1/d) [d - (Tr sqrt(rho))^2].
std::pair<double, double> c_max(const DensityMatrix& rho,
                                const ObservableSet& obs);

/// Averaged WYD uncertainty sum_i I_alpha(rho, H_i) over d^2 observables,
/// brute force and the closed form d - Tr(rho^alpha) Tr(rho^(1-alpha)).
std::pair<double, double> q_alpha_uncertainty(const DensityMatrix& rho,
                                              double alpha,
                                              const ObservableSet& obs);

struct CuEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double closed = 0.0;

  /// (estimate - closed)/std_error, defined as 0 when the difference is
  /// numerically zero (degenerate states) or std_error vanishes.
  double z_score() const;
};

/// Haar average of Q(rho, U Pi U^dagger) over `samples` random bases, with Pi
/// the computational projective measurement. Per-sample streams are split
/// from `seed`, so the estimate is reproducible.
CuEstimate c_u_monte_carlo(const DensityMatrix& rho, int samples, RngSeed seed);

/// Named coherence quantities for one state: brute-force values, closed
/// forms, residuals, relation checks, and ordering flags.
struct CoherenceReport {
  struct Value {
    std::optional<double> brute;
    std::optional<double> closed;
    std::optional<double> residual;
    std::optional<double> estimate;
    std::optional<double> std_error;
  };
  struct Relation {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
  };

  int dim = 0;
  double alpha = 0.5;
  std::string state_id;
  std::optional<double> kappa;
  std::optional<double> a;
  std::optional<int> samples;
  std::vector<std::pair<std::string, Value>> quantities;
  std::vector<std::pair<std::string, Relation>> relations;
  bool ordering_ok = true;
  /// True when the state is close enough to maximally mixed that every
  /// quantity is ~0 and order comparisons are vacuous.
  bool ordering_degenerate = false;

  const Value* find(const std::string& name) const;
};

struct ReportRequest {
  const MumSet* mum = nullptr;
  const GsmSet* gsm = nullptr;
  const MubSet* mub = nullptr;
  const GsmSet* sic = nullptr;
  double alpha = 0.5;
  int cu_samples = 0;  // 0 skips the Monte Carlo estimate
  RngSeed seed;
  std::string state_id;
};

/// Computes every closed form, every available brute-force counterpart, the
/// cross-relations between them, and the ordering checks.
CoherenceReport relations_report(const DensityMatrix& rho,
                                 const ReportRequest& request);

/// CSV of the pure-state coherence curves (d-1)/d, (d-1)/(d+1) and
/// (d-1)/(d(d+1)) for d = 2..dmax; header "d,c_max,c_mub,c_sic".
std::string figure1_csv(int dmax);

}  // namespace coh
