/*
 * Copyright 2026 The lopsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the lopsim shared library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_destroy function. Every fallible call returns a lopsim_status;
 * on failure lopsim_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings handed out by a
 * report stay valid until the report is destroyed.
 */
#ifndef LOPSIM_C_API_H
#define LOPSIM_C_API_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(LOPSIM_BUILDING_LIBRARY)
#define LOPSIM_API __declspec(dllexport)
#else
#define LOPSIM_API __declspec(dllimport)
#endif
#else
#define LOPSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lopsim_status {
    LOPSIM_OK = 0,
    LOPSIM_ERR_CONFIG = 1,
    LOPSIM_ERR_MODE = 2,
    LOPSIM_ERR_NORMALIZATION = 3,
    LOPSIM_ERR_UNITARITY = 4,
    LOPSIM_ERR_ENCODING = 5,
    LOPSIM_ERR_INVALID_ARGUMENT = 6,
    LOPSIM_ERR_INTERNAL = 7
} lopsim_status;

typedef enum lopsim_amplitude {
    LOPSIM_AMP_A = 0, /* photon 1, H */
    LOPSIM_AMP_B = 1, /* photon 1, V */
    LOPSIM_AMP_C = 2, /* photon 3, H */
    LOPSIM_AMP_D = 3, /* photon 3, V */
    LOPSIM_AMP_CHI2_H = 4,
    LOPSIM_AMP_CHI2_V = 5
} lopsim_amplitude;

typedef enum lopsim_herald { LOPSIM_HERALD_D3 = 0, LOPSIM_HERALD_D4 = 1 } lopsim_herald;

typedef enum lopsim_format { LOPSIM_FORMAT_JSON = 0, LOPSIM_FORMAT_CSV = 1 } lopsim_format;

typedef enum lopsim_sweep_protocol { LOPSIM_SWEEP_SWAP = 0, LOPSIM_SWEEP_TRANSFER = 1 } lopsim_sweep_protocol;

typedef struct lopsim_params lopsim_params;
typedef struct lopsim_report lopsim_report;

LOPSIM_API const char *lopsim_version(void);
LOPSIM_API const char *lopsim_last_error(void);
LOPSIM_API const char *lopsim_status_name(lopsim_status status);

/* Parameters default to a = b = c = d = 1/sqrt(2) and chi2 = (1, 1)/sqrt(2). */
LOPSIM_API lopsim_status lopsim_params_create(lopsim_params **out);
LOPSIM_API void lopsim_params_destroy(lopsim_params *params);
LOPSIM_API lopsim_status lopsim_params_set(lopsim_params *params, lopsim_amplitude which, double re, double im);
LOPSIM_API lopsim_status lopsim_params_get(const lopsim_params *params, lopsim_amplitude which, double *re,
                                           double *im);
/*
 * Rescales each polarization qubit to unit norm. *renormalized (optional) is
 * set to 1 when some qubit deviated from unit norm by more than `tolerance`.
 * A zero qubit is LOPSIM_ERR_NORMALIZATION.
 */
LOPSIM_API lopsim_status lopsim_params_normalize(lopsim_params *params, double tolerance, int *renormalized);

LOPSIM_API lopsim_status lopsim_run_swap(const lopsim_params *params, lopsim_herald herald, lopsim_report **out);
LOPSIM_API lopsim_status lopsim_run_transfer(const lopsim_params *params, lopsim_report **out);
LOPSIM_API lopsim_status lopsim_run_hom(lopsim_report **out);
LOPSIM_API lopsim_status lopsim_run_verify(uint64_t seed, uint32_t samples, lopsim_report **out);
/* samples > 0 selects seeded random draws, otherwise a grid x grid real grid. */
LOPSIM_API lopsim_status lopsim_run_sweep(lopsim_sweep_protocol protocol, lopsim_herald herald, uint32_t grid,
                                          uint32_t samples, uint64_t seed, lopsim_report **out);

/* 1 unless the report carries a failed check (only verify reports can). */
LOPSIM_API int lopsim_report_passed(const lopsim_report *report);
LOPSIM_API lopsim_status lopsim_report_render(lopsim_report *report, lopsim_format format, const char **text);
LOPSIM_API void lopsim_report_destroy(lopsim_report *report);

#ifdef __cplusplus
}
#endif

#endif
