/*
 * rtfp.h - C interface to the two-fluid relativistic plasma solver.
 *
 * All functions returning rtfp_status yield RTFP_OK (0) on success and a
 * nonzero code otherwise; rtfp_last_error() describes the most recent
 * failure on the calling thread. Handles are opaque and single-threaded;
 * destroy them with the matching *_free call.
 *
 * This file is part of rtfp, released under the MIT License.
 * See LICENSE at the repository root for full license text.
 */

#ifndef RTFP_H
#define RTFP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the library's error taxonomy. */
typedef enum rtfp_status {
  RTFP_OK = 0,
  RTFP_E_INVALID_ARGUMENT = 1, /* bad value outside the solver's domain */
  RTFP_E_INADMISSIBLE = 2,     /* state left the physical region */
  RTFP_E_RECOVERY = 3,         /* primitive recovery failed */
  RTFP_E_NEWTON = 4,           /* implicit stage solve failed */
  RTFP_E_CONFIG = 5,           /* unusable configuration */
  RTFP_E_IO = 6,               /* file system error */
  RTFP_E_INTERNAL = 7          /* invariant violation inside the library */
} rtfp_status;

/* A run configuration under construction (key-value overrides on a named
 * benchmark case). */
typedef struct rtfp_config rtfp_config;

/* A completed run: diagnostics series and summary numbers. */
typedef struct rtfp_result rtfp_result;

/* ---- error reporting ---- */

/* Message of the last failing call on this thread; empty string if none. */
const char* rtfp_last_error(void);

/* ---- benchmark catalog ---- */

/* Number of shipped benchmark cases. */
int rtfp_case_count(void);

/* Copies the name and one-line summary of case `index` (0-based) into the
 * caller's buffers. Either buffer may be NULL to skip it; strings are
 * truncated to the given sizes, always NUL-terminated. */
rtfp_status rtfp_case_info(int index, char* name, size_t name_size,
                           char* summary, size_t summary_size);

/* ---- configuration ---- */

/* Empty configuration; set at least the key "case". */
rtfp_status rtfp_config_create(rtfp_config** out);

/* Configuration from a key-value file. */
rtfp_status rtfp_config_load(const char* path, rtfp_config** out);

/* Sets or replaces one entry; keys match the configuration-file format
 * (case, nx, ny, order, ec_only, imex, time_order, cfl, harmonic_cfl,
 * fixed_dt, t_start, t_end, sample_interval, snapshot_interval, track_psi,
 * psi_b0, gamma_i, gamma_e, r_i, r_e, kappa, chi, eta, source_scale).
 * Validation happens when the configuration is resolved. */
rtfp_status rtfp_config_set(rtfp_config* cfg, const char* key,
                            const char* value);

/* Resolves the configuration and writes the manifest text (the full
 * key-value echo, reload-able as a config file) into `buf`. `*needed`
 * (optional) receives the full length including the terminating NUL; the
 * text is truncated to `size`. Call with buf = NULL to query the size. */
rtfp_status rtfp_config_describe(const rtfp_config* cfg, char* buf,
                                 size_t size, size_t* needed);

void rtfp_config_free(rtfp_config* cfg);

/* ---- execution ---- */

/* Runs the configuration. When `out_dir` is non-NULL, writes manifest.txt,
 * series.csv, and numbered snapshot tables there. When `out` is non-NULL
 * it receives the result handle. */
rtfp_status rtfp_run(const rtfp_config* cfg, const char* out_dir,
                     rtfp_result** out);

/* Grid-refinement study: reruns the configured case at each of the `count`
 * resolutions in `sizes` and fills `errors` (L1 ion-density error against
 * the case's exact solution) and `orders` (observed order, 0 for the first
 * row). Both output arrays hold `count` entries; either may be NULL. */
rtfp_status rtfp_convergence(const rtfp_config* cfg, const int* sizes,
                             int count, double* errors, double* orders);

/* ---- results ---- */

long rtfp_result_steps(const rtfp_result* res);
double rtfp_result_t_final(const rtfp_result* res);

/* Worst per-stage Newton iteration count of the implicit solves (0 for
 * explicit runs). */
int rtfp_result_max_newton_iterations(const rtfp_result* res);

int rtfp_result_sample_count(const rtfp_result* res);

/* Copies sample `index` as {t, ion entropy, electron entropy, div-B L1,
 * reconnected flux} into `values[5]`. */
rtfp_status rtfp_result_sample(const rtfp_result* res, int index,
                               double values[5]);

void rtfp_result_free(rtfp_result* res);

#ifdef __cplusplus
}
#endif

#endif /* RTFP_H */
