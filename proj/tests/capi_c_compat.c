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

/* Compiled as plain C11: proves the public header needs no C++ and the
 * shared library resolves from a C program. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include <coherence/coherence.h>

int main(void) {
  if (coh_version() == NULL) return 1;

  coh_matrix* rho = NULL;
  if (coh_density_maximally_mixed(3, &rho) != COH_OK) return 2;

  double closed = -1.0;
  if (coh_closed_form_cmax(rho, &closed) != COH_OK) return 3;
  if (fabs(closed) > 1e-10) return 4;

  coh_measurement* mub = NULL;
  if (coh_mub_build(3, &mub) != COH_OK) return 5;
  int32_t ok = 0;
  if (coh_measurement_verify(mub, 1e-10, NULL, &ok) != COH_OK || ok != 1)
    return 6;

  if (coh_mub_build(6, &mub) != COH_ERR_NOT_PRIME) return 7;
  if (strlen(coh_last_error()) == 0) return 8;

  coh_measurement_free(mub);
  coh_matrix_free(rho);
  printf("c-compat ok (%s)\n", coh_version());
  return 0;
}
