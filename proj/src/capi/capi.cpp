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
#include "coherence/coherence.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "core/coherence.hpp"
#include "core/density.hpp"
#include "core/eigen.hpp"
#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/matrix.hpp"
#include "core/measurements.hpp"
#include "core/operator_basis.hpp"
#include "core/rng.hpp"
#include "core/verification.hpp"

struct coh_matrix {
  coh::Matrix m;
};

struct coh_basis {
  coh::PartitionedBasis partition;
  coh::ObservableSet observables;
};

struct coh_measurement {
  coh::Measurement m;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coh_status map_code(coh::ErrorCode code) {
  using coh::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return COH_ERR_INVALID_ARGUMENT;
    case ErrorCode::dim_mismatch: return COH_ERR_DIM_MISMATCH;
    case ErrorCode::not_hermitian: return COH_ERR_NOT_HERMITIAN;
    case ErrorCode::not_positive: return COH_ERR_NOT_POSITIVE;
    case ErrorCode::not_density: return COH_ERR_NOT_DENSITY;
    case ErrorCode::no_convergence: return COH_ERR_NO_CONVERGENCE;
    case ErrorCode::bad_rank: return COH_ERR_BAD_RANK;
    case ErrorCode::bad_alpha: return COH_ERR_BAD_ALPHA;
    case ErrorCode::zero_t: return COH_ERR_ZERO_T;
    case ErrorCode::bad_efficiency: return COH_ERR_BAD_EFFICIENCY;
    case ErrorCode::not_prime: return COH_ERR_NOT_PRIME;
    case ErrorCode::unsupported: return COH_ERR_UNSUPPORTED;
    case ErrorCode::bracket_failure: return COH_ERR_BRACKET_FAILURE;
    case ErrorCode::parse_error: return COH_ERR_PARSE;
  }
  return COH_ERR_INTERNAL;
}

template <typename Fn>
coh_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return COH_OK;
  } catch (const coh::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return COH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return COH_ERR_INTERNAL;
  }
}

coh_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return COH_ERR_NULL_ARGUMENT;
}

coh::DensityMatrix to_density(const coh_matrix* m) {
  return coh::DensityMatrix::from_matrix(m->m);
}

// NULL passes through; a non-null handle must hold the requested family.
template <typename Set>
const Set* family_or_null(const coh_measurement* m, const char* what) {
  if (!m) return nullptr;
  const Set* set = std::get_if<Set>(&m->m.value);
  if (!set)
    coh::raise(coh::ErrorCode::invalid_argument,
               std::string("measurement handle is not a ") + what + " family");
  return set;
}

coh::Matrix mub_projector(const coh::MubSet& mub, int basis_idx, int col) {
  const int d = mub.dim;
  const coh::Matrix& basis = mub.bases[basis_idx];
  coh::Matrix proj(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      proj(r, c) = basis(r, col) * std::conj(basis(c, col));
  return proj;
}

}  // namespace

extern "C" {

const char* coh_version(void) { return "0.1.0"; }

const char* coh_status_name(coh_status status) {
  switch (status) {
    case COH_OK: return "COH_OK";
    case COH_ERR_NULL_ARGUMENT: return "COH_ERR_NULL_ARGUMENT";
    case COH_ERR_INVALID_ARGUMENT: return "COH_ERR_INVALID_ARGUMENT";
    case COH_ERR_DIM_MISMATCH: return "COH_ERR_DIM_MISMATCH";
    case COH_ERR_NOT_HERMITIAN: return "COH_ERR_NOT_HERMITIAN";
    case COH_ERR_NOT_POSITIVE: return "COH_ERR_NOT_POSITIVE";
    case COH_ERR_NOT_DENSITY: return "COH_ERR_NOT_DENSITY";
    case COH_ERR_NO_CONVERGENCE: return "COH_ERR_NO_CONVERGENCE";
    case COH_ERR_BAD_RANK: return "COH_ERR_BAD_RANK";
    case COH_ERR_BAD_ALPHA: return "COH_ERR_BAD_ALPHA";
    case COH_ERR_ZERO_T: return "COH_ERR_ZERO_T";
    case COH_ERR_BAD_EFFICIENCY: return "COH_ERR_BAD_EFFICIENCY";
    case COH_ERR_NOT_PRIME: return "COH_ERR_NOT_PRIME";
    case COH_ERR_UNSUPPORTED: return "COH_ERR_UNSUPPORTED";
    case COH_ERR_BRACKET_FAILURE: return "COH_ERR_BRACKET_FAILURE";
    case COH_ERR_PARSE: return "COH_ERR_PARSE";
    case COH_ERR_INTERNAL: return "COH_ERR_INTERNAL";
  }
  return "COH_ERR_UNKNOWN";
}

const char* coh_last_error(void) { return g_last_error.c_str(); }

void coh_string_free(char* text) { delete[] text; }

coh_status coh_matrix_create(int32_t dim, const double* reim,
                             coh_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    coh::Matrix m(dim);
    if (reim) {
      auto entries = m.entries();
      for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i] = {reim[2 * i], reim[2 * i + 1]};
    }
    *out = new coh_matrix{std::move(m)};
  });
}

coh_status coh_matrix_clone(const coh_matrix* m, coh_matrix** out) {
  if (!m) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new coh_matrix{m->m}; });
}

void coh_matrix_free(coh_matrix* m) { delete m; }

int32_t coh_matrix_dim(const coh_matrix* m) { return m ? m->m.dim() : 0; }

coh_status coh_matrix_get(const coh_matrix* m, double* reim) {
  if (!m) return null_argument("matrix");
  if (!reim) return null_argument("reim");
  const auto entries = m->m.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    reim[2 * i] = entries[i].real();
    reim[2 * i + 1] = entries[i].imag();
  }
  return COH_OK;
}

coh_status coh_matrix_to_json(const coh_matrix* m, char** json) {
  if (!m) return null_argument("matrix");
  if (!json) return null_argument("json");
  return guarded([&] { *json = dup_string(coh::matrix_to_json(m->m).dump()); });
}

coh_status coh_matrix_from_json(const char* json, coh_matrix** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_matrix{coh::matrix_from_json(coh::parse_json_text(json))};
  });
}

coh_status coh_hs_inner(const coh_matrix* a, const coh_matrix* b, double* re,
                        double* im) {
  if (!a || !b) return null_argument("matrix");
  return guarded([&] {
    const coh::cplx v = coh::hs_inner(a->m, b->m);
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

coh_status coh_eigh(const coh_matrix* m, double* eigenvalues,
                    coh_matrix** eigenvectors) {
  if (!m) return null_argument("matrix");
  return guarded([&] {
    auto eig = coh::eigh(m->m);
    if (eigenvalues)
      for (int i = 0; i < m->m.dim(); ++i) eigenvalues[i] = eig.eigenvalues[i];
    if (eigenvectors)
      *eigenvectors = new coh_matrix{std::move(eig.eigenvectors)};
  });
}

coh_status coh_density_validate(const coh_matrix* m) {
  if (!m) return null_argument("matrix");
  return guarded([&] { to_density(m); });
}

coh_status coh_density_maximally_mixed(int32_t dim, coh_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_matrix{coh::DensityMatrix::maximally_mixed(dim).matrix()};
  });
}

coh_status coh_density_pure_basis(int32_t dim, int32_t index,
                                  coh_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out =
        new coh_matrix{coh::DensityMatrix::pure_basis_state(dim, index).matrix()};
  });
}

coh_status coh_density_random(int32_t dim, int32_t rank, uint64_t seed,
                              uint64_t stream, coh_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_matrix{
        coh::random_density(dim, rank, {seed, stream}).matrix()};
  });
}

coh_status coh_density_purity(const coh_matrix* rho, double* purity) {
  if (!rho) return null_argument("rho");
  if (!purity) return null_argument("purity");
  return guarded([&] { *purity = to_density(rho).purity(); });
}

coh_status coh_matrix_power(const coh_matrix* rho, double alpha,
                            coh_matrix** out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_matrix{coh::matrix_power(to_density(rho), alpha)};
  });
}

coh_status coh_matrix_sqrt(const coh_matrix* rho, coh_matrix** out) {
  return coh_matrix_power(rho, 0.5, out);
}

coh_status coh_haar_unitary(int32_t dim, uint64_t seed, uint64_t stream,
                            coh_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_matrix{coh::haar_unitary(dim, {seed, stream})};
  });
}

coh_status coh_basis_create(int32_t dim, coh_basis** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_basis{
        coh::PartitionedBasis::from_basis(coh::OperatorBasis::gell_mann(dim)),
        coh::ObservableSet::standard(dim)};
  });
}

void coh_basis_free(coh_basis* basis) { delete basis; }

int32_t coh_basis_dim(const coh_basis* basis) {
  return basis ? basis->partition.dim() : 0;
}

coh_status coh_basis_op(const coh_basis* basis, int32_t k, coh_matrix** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (k < 0 || k >= basis->partition.flat().size())
      coh::raise(coh::ErrorCode::invalid_argument, "operator index out of range");
    *out = new coh_matrix{basis->partition.flat().op(k)};
  });
}

coh_status coh_basis_partitioned_op(const coh_basis* basis, int32_t b,
                                    int32_t n, coh_matrix** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (b < 1 || b > basis->partition.group_count() || n < 1 ||
        n > basis->partition.group_size())
      coh::raise(coh::ErrorCode::invalid_argument, "grid index out of range");
    *out = new coh_matrix{basis->partition.op(b - 1, n - 1)};
  });
}

coh_status coh_basis_group_sum(const coh_basis* basis, int32_t b,
                               coh_matrix** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (b < 1 || b > basis->partition.group_count())
      coh::raise(coh::ErrorCode::invalid_argument, "group index out of range");
    *out = new coh_matrix{basis->partition.group_sum(b - 1)};
  });
}

coh_status coh_basis_observable(const coh_basis* basis, int32_t i,
                                coh_matrix** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& ops = basis->observables.ops();
    if (i < 0 || i >= static_cast<int32_t>(ops.size()))
      coh::raise(coh::ErrorCode::invalid_argument,
                 "observable index out of range");
    *out = new coh_matrix{ops[i]};
  });
}

coh_status coh_basis_export_json(const coh_basis* basis, char** json) {
  if (!basis) return null_argument("basis");
  if (!json) return null_argument("json");
  return guarded([&] {
    *json = dup_string(coh::basis_export_json(basis->partition).dump());
  });
}

double coh_kappa_of(int32_t dim, double t) {
  if (dim < 2) return std::numeric_limits<double>::quiet_NaN();
  return coh::kappa_of(dim, t);
}

double coh_a_of(int32_t dim, double t) {
  if (dim < 2) return std::numeric_limits<double>::quiet_NaN();
  return coh::a_of(dim, t);
}

coh_status coh_mum_build(const coh_basis* basis, double t,
                         coh_measurement** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_measurement{{coh::Measurement::Kind::mum,
                                coh::build_mum(basis->partition, t)}};
  });
}

coh_status coh_gsm_build(const coh_basis* basis, double t,
                         coh_measurement** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_measurement{{coh::Measurement::Kind::gsm,
                                coh::build_gsm(basis->partition.flat(), t)}};
  });
}

coh_status coh_mub_build(int32_t dim, coh_measurement** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_measurement{
        {coh::Measurement::Kind::mub, coh::build_mub_prime(dim)}};
  });
}

coh_status coh_sic_builtin(int32_t dim, coh_measurement** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_measurement{
        {coh::Measurement::Kind::sic, coh::builtin_sic(dim)}};
  });
}

coh_status coh_max_positive_t_mum(const coh_basis* basis, double* t_star) {
  if (!basis) return null_argument("basis");
  if (!t_star) return null_argument("t_star");
  return guarded([&] { *t_star = coh::max_positive_t_mum(basis->partition); });
}

coh_status coh_max_positive_t_gsm(const coh_basis* basis, double* t_star) {
  if (!basis) return null_argument("basis");
  if (!t_star) return null_argument("t_star");
  return guarded(
      [&] { *t_star = coh::max_positive_t_gsm(basis->partition.flat()); });
}

void coh_measurement_free(coh_measurement* m) { delete m; }

int32_t coh_measurement_dim(const coh_measurement* m) {
  return m ? m->m.dim() : 0;
}

coh_status coh_measurement_get_kind(const coh_measurement* m,
                                    coh_measurement_kind* kind) {
  if (!m) return null_argument("measurement");
  if (!kind) return null_argument("kind");
  switch (m->m.kind) {
    case coh::Measurement::Kind::mum: *kind = COH_MEASUREMENT_MUM; break;
    case coh::Measurement::Kind::gsm: *kind = COH_MEASUREMENT_GSM; break;
    case coh::Measurement::Kind::mub: *kind = COH_MEASUREMENT_MUB; break;
    case coh::Measurement::Kind::sic: *kind = COH_MEASUREMENT_SIC; break;
  }
  return COH_OK;
}

coh_status coh_measurement_params(const coh_measurement* m, double* t,
                                  double* efficiency) {
  if (!m) return null_argument("measurement");
  return guarded([&] {
    double t_val = 0.0;
    double eff = 0.0;
    if (const auto* mum = std::get_if<coh::MumSet>(&m->m.value)) {
      t_val = mum->t;
      eff = mum->kappa;
    } else if (const auto* gsm = std::get_if<coh::GsmSet>(&m->m.value)) {
      t_val = gsm->t;
      eff = gsm->a;
    } else {
      t_val = std::numeric_limits<double>::quiet_NaN();
      eff = 1.0;  // a MUB set is the kappa = 1 family
    }
    if (t) *t = t_val;
    if (efficiency) *efficiency = eff;
  });
}

coh_status coh_measurement_group_count(const coh_measurement* m,
                                       int32_t* count) {
  if (!m) return null_argument("measurement");
  if (!count) return null_argument("count");
  const bool banded = m->m.kind == coh::Measurement::Kind::mum ||
                      m->m.kind == coh::Measurement::Kind::mub;
  *count = banded ? m->m.dim() + 1 : 1;
  return COH_OK;
}

coh_status coh_measurement_group_size(const coh_measurement* m,
                                      int32_t* size) {
  if (!m) return null_argument("measurement");
  if (!size) return null_argument("size");
  const bool banded = m->m.kind == coh::Measurement::Kind::mum ||
                      m->m.kind == coh::Measurement::Kind::mub;
  const int32_t d = m->m.dim();
  *size = banded ? d : d * d;
  return COH_OK;
}

coh_status coh_measurement_element(const coh_measurement* m, int32_t group,
                                   int32_t index, coh_matrix** out) {
  if (!m) return null_argument("measurement");
  if (!out) return null_argument("out");
  return guarded([&] {
    int32_t groups = 0;
    int32_t size = 0;
    coh_measurement_group_count(m, &groups);
    coh_measurement_group_size(m, &size);
    if (group < 0 || group >= groups || index < 0 || index >= size)
      coh::raise(coh::ErrorCode::invalid_argument, "element index out of range");

    if (const auto* mum = std::get_if<coh::MumSet>(&m->m.value)) {
      *out = new coh_matrix{mum->povms[group].elements[index]};
    } else if (const auto* gsm = std::get_if<coh::GsmSet>(&m->m.value)) {
      *out = new coh_matrix{gsm->povm.elements[index]};
    } else {
      const auto& mub = std::get<coh::MubSet>(m->m.value);
      *out = new coh_matrix{mub_projector(mub, group, index)};
    }
  });
}

coh_status coh_measurement_to_json(const coh_measurement* m, char** json) {
  if (!m) return null_argument("measurement");
  if (!json) return null_argument("json");
  return guarded(
      [&] { *json = dup_string(coh::measurement_to_json(m->m).dump()); });
}

coh_status coh_measurement_from_json(const char* json, coh_measurement** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new coh_measurement{
        coh::measurement_from_json(coh::parse_json_text(json))};
  });
}

coh_status coh_measurement_verify(const coh_measurement* m, double tol,
                                  char** report_json, int32_t* ok) {
  if (!m) return null_argument("measurement");
  return guarded([&] {
    const auto report = m->m.verify();
    if (report_json) {
      nlohmann::json j = coh::family_report_to_json(report);
      j["kind"] = coh::kind_name(m->m.kind);
      j["dim"] = m->m.dim();
      j["tol"] = tol;
      j["pass"] = report.passed(tol);
      *report_json = dup_string(j.dump());
    }
    if (ok) *ok = report.passed(tol) ? 1 : 0;
  });
}

coh_status coh_skew_information(const coh_matrix* rho, const coh_matrix* m,
                                double* out) {
  if (!rho || !m) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded([&] { *out = coh::skew_information(to_density(rho), m->m); });
}

coh_status coh_wyd_information(const coh_matrix* rho, const coh_matrix* m,
                               double alpha, double* out) {
  if (!rho || !m) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = coh::wyd_information(to_density(rho), m->m, alpha); });
}

coh_status coh_q_measure(const coh_matrix* rho, const coh_measurement* m,
                         int32_t group, double alpha, double* out) {
  if (!rho) return null_argument("rho");
  if (!m) return null_argument("measurement");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto density = to_density(rho);
    if (const auto* mum = std::get_if<coh::MumSet>(&m->m.value)) {
      if (group < 0 || group > mum->dim)
        coh::raise(coh::ErrorCode::invalid_argument, "group index out of range");
      *out = coh::q_measure(density, mum->povms[group], alpha);
    } else if (const auto* gsm = std::get_if<coh::GsmSet>(&m->m.value)) {
      if (group != 0)
        coh::raise(coh::ErrorCode::invalid_argument, "group index out of range");
      *out = coh::q_measure(density, gsm->povm, alpha);
    } else {
      const auto& mub = std::get<coh::MubSet>(m->m.value);
      if (group < 0 || group > mub.dim)
        coh::raise(coh::ErrorCode::invalid_argument, "group index out of range");
      coh::Povm povm{mub.dim, {}};
      for (int col = 0; col < mub.dim; ++col)
        povm.elements.push_back(mub_projector(mub, group, col));
      *out = coh::q_measure(density, povm, alpha);
    }
  });
}

coh_status coh_avg_coherence(const coh_matrix* rho, const coh_measurement* m,
                             double alpha, double* out) {
  if (!rho) return null_argument("rho");
  if (!m) return null_argument("measurement");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto density = to_density(rho);
    if (const auto* mum = std::get_if<coh::MumSet>(&m->m.value))
      *out = coh::avg_coherence_mum(density, *mum, alpha);
    else if (const auto* gsm = std::get_if<coh::GsmSet>(&m->m.value))
      *out = coh::avg_coherence_gsm(density, *gsm, alpha);
    else
      *out = coh::avg_coherence_mub(density, std::get<coh::MubSet>(m->m.value),
                                    alpha);
  });
}

coh_status coh_closed_form_mum(const coh_matrix* rho, double kappa,
                               double* out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto density = to_density(rho);
    *out = coh::closed_form_mum(density, density.dim(), kappa);
  });
}

coh_status coh_closed_form_gsm(const coh_matrix* rho, double a, double* out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto density = to_density(rho);
    *out = coh::closed_form_gsm(density, density.dim(), a);
  });
}

coh_status coh_closed_form_mub(const coh_matrix* rho, double* out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] { *out = coh::closed_form_mub(to_density(rho)); });
}

coh_status coh_closed_form_sic(const coh_matrix* rho, double* out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] { *out = coh::closed_form_sic(to_density(rho)); });
}

coh_status coh_closed_form_cmax(const coh_matrix* rho, double* out) {
  if (!rho) return null_argument("rho");
  if (!out) return null_argument("out");
  return guarded([&] { *out = coh::closed_form_cmax(to_density(rho)); });
}

coh_status coh_c_max(const coh_matrix* rho, double* brute, double* closed) {
  if (!rho) return null_argument("rho");
  return guarded([&] {
    const auto density = to_density(rho);
    const auto obs = coh::ObservableSet::standard(density.dim());
    const auto [b, c] = coh::c_max(density, obs);
    if (brute) *brute = b;
    if (closed) *closed = c;
  });
}

coh_status coh_q_alpha_uncertainty(const coh_matrix* rho, double alpha,
                                   double* brute, double* closed) {
  if (!rho) return null_argument("rho");
  return guarded([&] {
    const auto density = to_density(rho);
    const auto obs = coh::ObservableSet::standard(density.dim());
    const auto [b, c] = coh::q_alpha_uncertainty(density, alpha, obs);
    if (brute) *brute = b;
    if (closed) *closed = c;
  });
}

coh_status coh_cu_monte_carlo(const coh_matrix* rho, int32_t samples,
                              uint64_t seed, uint64_t stream, double* estimate,
                              double* std_error, double* closed) {
  if (!rho) return null_argument("rho");
  return guarded([&] {
    const auto cu =
        coh::c_u_monte_carlo(to_density(rho), samples, {seed, stream});
    if (estimate) *estimate = cu.estimate;
    if (std_error) *std_error = cu.std_error;
    if (closed) *closed = cu.closed;
  });
}

coh_status coh_relations_report(const coh_matrix* rho,
                                const coh_measurement* mum,
                                const coh_measurement* gsm,
                                const coh_measurement* mub,
                                const coh_measurement* sic, double alpha,
                                int32_t cu_samples, uint64_t seed,
                                uint64_t stream, const char* state_id,
                                char** report_json) {
  if (!rho) return null_argument("rho");
  if (!report_json) return null_argument("report_json");
  return guarded([&] {
    coh::ReportRequest request;
    request.mum = family_or_null<coh::MumSet>(mum, "mum");
    request.gsm = family_or_null<coh::GsmSet>(gsm, "gsm");
    request.mub = family_or_null<coh::MubSet>(mub, "mub");
    request.sic = family_or_null<coh::GsmSet>(sic, "sic");
    request.alpha = alpha;
    request.cu_samples = cu_samples;
    request.seed = {seed, stream};
    if (state_id) request.state_id = state_id;
    const auto report = coh::relations_report(to_density(rho), request);
    *report_json = dup_string(coh::report_to_json(report).dump());
  });
}

coh_status coh_verify_suite(int32_t dim_lo, int32_t dim_hi, int32_t trials,
                            uint64_t seed, double tol, char** table_json,
                            int32_t* ok) {
  return guarded([&] {
    coh::VerifyOptions options;
    options.dim_lo = dim_lo;
    options.dim_hi = dim_hi;
    options.trials = trials;
    options.seed = seed;
    options.tol = tol;
    const auto summary = coh::run_verification(options);

    if (table_json) {
      nlohmann::json identities = nlohmann::json::array();
      for (const auto& id : summary.identities)
        identities.push_back({{"name", id.name},
                              {"max_residual", id.max_residual},
                              {"tolerance", id.tolerance},
                              {"count", id.count},
                              {"pass", id.passed()}});
      nlohmann::json j{{"identities", std::move(identities)},
                       {"pass", summary.all_passed()},
                       {"dim_lo", dim_lo},
                       {"dim_hi", dim_hi},
                       {"trials", trials},
                       {"seed", seed},
                       {"tol", tol}};
      *table_json = dup_string(j.dump());
    }
    if (ok) *ok = summary.all_passed() ? 1 : 0;
  });
}

coh_status coh_figure1_csv(int32_t dmax, char** csv) {
  if (!csv) return null_argument("csv");
  return guarded([&] { *csv = dup_string(coh::figure1_csv(dmax)); });
}

}  // extern "C"
