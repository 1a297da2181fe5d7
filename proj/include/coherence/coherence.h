/* Copyright 2026 The coherence-toolkit developers
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the coherence toolkit.
 *
 * The library builds complementary measurement families (mutually unbiased
 * bases and measurements, symmetric informationally complete measurements and
 * their general relaxations), evaluates skew-information coherence
 * quantities over them, and checks the closed forms these averages satisfy.
 *
 * All objects are opaque handles created through coh_* constructors and
 * released with the matching coh_*_free. Functions return COH_OK on success;
 * on failure coh_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with coh_string_free.
 */
#ifndef COHERENCE_TOOLKIT_COHERENCE_H
#define COHERENCE_TOOLKIT_COHERENCE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coh_status {
  COH_OK = 0,
  COH_ERR_NULL_ARGUMENT = 1,
  COH_ERR_INVALID_ARGUMENT = 2,
  COH_ERR_DIM_MISMATCH = 3,
  COH_ERR_NOT_HERMITIAN = 4,
  COH_ERR_NOT_POSITIVE = 5,
  COH_ERR_NOT_DENSITY = 6,
  COH_ERR_NO_CONVERGENCE = 7,
  COH_ERR_BAD_RANK = 8,
  COH_ERR_BAD_ALPHA = 9,
  COH_ERR_ZERO_T = 10,
  COH_ERR_BAD_EFFICIENCY = 11,
  COH_ERR_NOT_PRIME = 12,
  COH_ERR_UNSUPPORTED = 13,
  COH_ERR_BRACKET_FAILURE = 14,
  COH_ERR_PARSE = 15,
  COH_ERR_INTERNAL = 16
} coh_status;

typedef enum coh_measurement_kind {
  COH_MEASUREMENT_MUM = 0,
  COH_MEASUREMENT_GSM = 1,
  COH_MEASUREMENT_MUB = 2,
  COH_MEASUREMENT_SIC = 3
} coh_measurement_kind;

typedef struct coh_matrix coh_matrix;
typedef struct coh_basis coh_basis;
typedef struct coh_measurement coh_measurement;

const char* coh_version(void);
const char* coh_status_name(coh_status status);
/* Message of the most recent failure on the calling thread; never NULL. */
const char* coh_last_error(void);
void coh_string_free(char* text);

/* ---- complex square matrices ------------------------------------------- */

/* reim holds 2*dim*dim doubles, row-major interleaved (re, im); NULL gives a
 * zero matrix. */
coh_status coh_matrix_create(int32_t dim, const double* reim, coh_matrix** out);
coh_status coh_matrix_clone(const coh_matrix* m, coh_matrix** out);
void coh_matrix_free(coh_matrix* m);
int32_t coh_matrix_dim(const coh_matrix* m);
/* Copies the entries into reim (2*dim*dim doubles, interleaved). */
coh_status coh_matrix_get(const coh_matrix* m, double* reim);

coh_status coh_matrix_to_json(const coh_matrix* m, char** json);
coh_status coh_matrix_from_json(const char* json, coh_matrix** out);

/* Hilbert-Schmidt inner product Tr(A^dagger B). */
coh_status coh_hs_inner(const coh_matrix* a, const coh_matrix* b, double* re,
                        double* im);

/* Eigendecomposition of a Hermitian matrix: ascending eigenvalues (length
 * dim) and/or the unitary of eigenvector columns; either output may be NULL. */
coh_status coh_eigh(const coh_matrix* m, double* eigenvalues,
                    coh_matrix** eigenvectors);

/* ---- density matrices --------------------------------------------------- */

/* Validates Hermiticity, unit trace and positivity of a would-be state. */
coh_status coh_density_validate(const coh_matrix* m);
coh_status coh_density_maximally_mixed(int32_t dim, coh_matrix** out);
coh_status coh_density_pure_basis(int32_t dim, int32_t index, coh_matrix** out);
/* rho = G G^dagger / Tr(G G^dagger), G a dim x rank complex Gaussian matrix;
 * identical (seed, stream) pairs reproduce identical states. */
coh_status coh_density_random(int32_t dim, int32_t rank, uint64_t seed,
                              uint64_t stream, coh_matrix** out);
coh_status coh_density_purity(const coh_matrix* rho, double* purity);

/* rho^alpha for alpha in (0, 1]; negative round-off eigenvalues are clamped
 * to zero before powering. */
coh_status coh_matrix_power(const coh_matrix* rho, double alpha,
                            coh_matrix** out);
coh_status coh_matrix_sqrt(const coh_matrix* rho, coh_matrix** out);

/* Haar-distributed random unitary (QR of a Ginibre matrix, positive-real R
 * diagonal convention). */
coh_status coh_haar_unitary(int32_t dim, uint64_t seed, uint64_t stream,
                            coh_matrix** out);

/* ---- operator bases ------------------------------------------------------ */

/* Generalized Gell-Mann basis of dim^2 - 1 traceless Hermitian orthonormal
 * operators, partitioned into (dim+1) groups of (dim-1). */
coh_status coh_basis_create(int32_t dim, coh_basis** out);
void coh_basis_free(coh_basis* basis);
int32_t coh_basis_dim(const coh_basis* basis);

/* Basis operator by flat index k in [0, dim^2 - 2]. */
coh_status coh_basis_op(const coh_basis* basis, int32_t k, coh_matrix** out);
/* Partitioned operator F_{n,b}, 1-based b in [1, dim+1], n in [1, dim-1]. */
coh_status coh_basis_partitioned_op(const coh_basis* basis, int32_t b,
                                    int32_t n, coh_matrix** out);
/* Group sum F^(b) = sum_n F_{n,b}, 1-based b. */
coh_status coh_basis_group_sum(const coh_basis* basis, int32_t b,
                               coh_matrix** out);
/* Observable H_i of the completed orthogonal set (basis plus I/sqrt(d)),
 * flat index i in [0, dim^2 - 1]. */
coh_status coh_basis_observable(const coh_basis* basis, int32_t i,
                                coh_matrix** out);
/* JSON list of the partitioned operators with 1-based {"n", "b"} metadata. */
coh_status coh_basis_export_json(const coh_basis* basis, char** json);

/* ---- measurement families ------------------------------------------------ */

double coh_kappa_of(int32_t dim, double t);
double coh_a_of(int32_t dim, double t);

coh_status coh_mum_build(const coh_basis* basis, double t,
                         coh_measurement** out);
coh_status coh_gsm_build(const coh_basis* basis, double t,
                         coh_measurement** out);
/* Complete MUB set for prime dim <= 31. */
coh_status coh_mub_build(int32_t dim, coh_measurement** out);
/* Exact SIC-POVM for dim 2 or 3. */
coh_status coh_sic_builtin(int32_t dim, coh_measurement** out);

/* Largest positive strength t keeping every element PSD (bisection). */
coh_status coh_max_positive_t_mum(const coh_basis* basis, double* t_star);
coh_status coh_max_positive_t_gsm(const coh_basis* basis, double* t_star);

void coh_measurement_free(coh_measurement* m);
int32_t coh_measurement_dim(const coh_measurement* m);
coh_status coh_measurement_get_kind(const coh_measurement* m,
                                    coh_measurement_kind* kind);
/* Strength t and the efficiency (kappa for mum/mub, a for gsm/sic). */
coh_status coh_measurement_params(const coh_measurement* m, double* t,
                                  double* efficiency);
/* Group layout: mum and mub have dim+1 groups of dim elements, gsm and sic a
 * single group of dim^2. MUB elements are returned as rank-one projectors. */
coh_status coh_measurement_group_count(const coh_measurement* m,
                                       int32_t* count);
coh_status coh_measurement_group_size(const coh_measurement* m, int32_t* size);
coh_status coh_measurement_element(const coh_measurement* m, int32_t group,
                                   int32_t index, coh_matrix** out);

coh_status coh_measurement_to_json(const coh_measurement* m, char** json);
coh_status coh_measurement_from_json(const char* json, coh_measurement** out);

/* Residuals of the family's defining conditions as JSON plus a pass flag. */
coh_status coh_measurement_verify(const coh_measurement* m, double tol,
                                  char** report_json, int32_t* ok);

/* ---- coherence quantities ------------------------------------------------ */

coh_status coh_skew_information(const coh_matrix* rho, const coh_matrix* m,
                                double* out);
coh_status coh_wyd_information(const coh_matrix* rho, const coh_matrix* m,
                               double alpha, double* out);

/* Q(rho, group) = sum_i I_alpha(rho, P_i) over one measurement group. */
coh_status coh_q_measure(const coh_matrix* rho, const coh_measurement* m,
                         int32_t group, double alpha, double* out);

/* Brute-force average coherence of the family: mum and mub averages are
 * divided by dim+1, gsm and sic sums are not normalized. */
coh_status coh_avg_coherence(const coh_matrix* rho, const coh_measurement* m,
                             double alpha, double* out);

/* Closed forms, all proportional to d - (Tr sqrt(rho))^2. */
coh_status coh_closed_form_mum(const coh_matrix* rho, double kappa,
                               double* out);
coh_status coh_closed_form_gsm(const coh_matrix* rho, double a, double* out);
coh_status coh_closed_form_mub(const coh_matrix* rho, double* out);
coh_status coh_closed_form_sic(const coh_matrix* rho, double* out);
coh_status coh_closed_form_cmax(const coh_matrix* rho, double* out);

/* Maximal coherence over the complete orthogonal observable set: brute-force
 * sum and closed form. */
coh_status coh_c_max(const coh_matrix* rho, double* brute, double* closed);

/* Averaged WYD uncertainty over the observable set at given alpha. */
coh_status coh_q_alpha_uncertainty(const coh_matrix* rho, double alpha,
                                   double* brute, double* closed);

/* Monte Carlo estimate of the Haar-averaged coherence over random bases. */
coh_status coh_cu_monte_carlo(const coh_matrix* rho, int32_t samples,
                              uint64_t seed, uint64_t stream, double* estimate,
                              double* std_error, double* closed);

/* Full report: quantities (brute, closed, residual), the cross-relations and
 * ordering checks, serialized as JSON. Measurement handles may be NULL;
 * cu_samples = 0 skips the Monte Carlo estimate. */
coh_status coh_relations_report(const coh_matrix* rho,
                                const coh_measurement* mum,
                                const coh_measurement* gsm,
                                const coh_measurement* mub,
                                const coh_measurement* sic, double alpha,
                                int32_t cu_samples, uint64_t seed,
                                uint64_t stream, const char* state_id,
                                char** report_json);

/* ---- verification suite and figure data ---------------------------------- */

/* Runs the seeded identity suite over dims [dim_lo, dim_hi] (within 2..6).
 * Per-identity tolerances scale with tol / 1e-9. Returns the result table as
 * JSON and sets ok to 1 when every identity passed. */
coh_status coh_verify_suite(int32_t dim_lo, int32_t dim_hi, int32_t trials,
                            uint64_t seed, double tol, char** table_json,
                            int32_t* ok);

/* CSV "d,c_max,c_mub,c_sic" of the pure-state coherence curves for
 * d = 2..dmax. */
coh_status coh_figure1_csv(int32_t dmax, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* COHERENCE_TOOLKIT_COHERENCE_H */
