/* SPDX-License-Identifier: Apache-2.0
 *
 * qdc — delayed-choice interferometer simulator, public C API.
 *
 * The library simulates the two quantum delayed-choice circuits (single
 * ancilla and entangled ancilla), computes closed-form and hidden-variable
 * intensity predictions, runs exact or shot-sampled parameter sweeps with an
 * optional device noise model, and writes CSV / SVG / manifest artifacts.
 *
 * Every fallible call returns a qdc_status; on failure a thread-local
 * message is available from qdc_last_error(). Opaque handles are released
 * with their matching *_free function.
 */
#ifndef QDC_QDC_H
#define QDC_QDC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QDC_BUILD)
#define QDC_API __declspec(dllexport)
#else
#define QDC_API __declspec(dllimport)
#endif
#else
#define QDC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdc_status {
  QDC_OK = 0,
  QDC_ERROR_INVALID_ARGUMENT = 1, /* null pointer, bad enum string, ... */
  QDC_ERROR_DOMAIN = 2,           /* value outside its allowed domain */
  QDC_ERROR_PARSE = 3,            /* malformed JSON / CSV document */
  QDC_ERROR_IO = 4,               /* file read/write failure */
  QDC_ERROR_IMPOSSIBLE_BRANCH = 5,/* post-selection on a zero-probability outcome */
  QDC_ERROR_INTERNAL = 6
} qdc_status;

QDC_API const char* qdc_version(void);
QDC_API const char* qdc_status_name(qdc_status status);

/* Message from the most recent failing call on the calling thread; empty
 * string when the last call succeeded. */
QDC_API const char* qdc_last_error(void);

/* Release a string returned through a char** out-parameter. */
QDC_API void qdc_string_free(char* s);

/* ---------------------------------------------------------------- */
/* Analytic predictions                                              */
/* ---------------------------------------------------------------- */

/* Single-ancilla detector intensities:
 * e0 = cos^2(alpha)/2 + sin^2(alpha) cos^2(phi/2), e1 = 1 - e0. */
QDC_API qdc_status qdc_qm_single(double alpha, double phi, double* e0, double* e1);

/* Closed-form candidate for the post-selected intensity of the entangled
 * scheme. Disagrees with the simulated circuit (see the comparison report);
 * exposed for cross-checking only. */
QDC_API qdc_status qdc_qm_entangled_closed_form(double alpha, double phi, int branch,
                                                double* e0);

/* Simulated post-selected intensities of the entangled scheme. Any output
 * pointer may be NULL if that quantity is not needed. */
QDC_API qdc_status qdc_qm_entangled_simulated(double alpha, double phi, int branch,
                                              double* conditional_e0, double* conditional_e1,
                                              double* joint_e0, double* joint_e1,
                                              double* branch_prob);

/* Hidden-variable prediction 1/4 + cos^2(phi/2)/2 (alpha-independent). */
QDC_API qdc_status qdc_hv_intensity(double phi, double* e);

/* Monte-Carlo estimate of the hidden-variable intensity; deterministic per
 * seed. */
QDC_API qdc_status qdc_hv_monte_carlo(double phi, uint64_t n_samples, uint64_t seed,
                                      double* e);

/* Fringe visibility (max-min)/(max+min) of an intensity curve sampled at
 * the given phase points. */
QDC_API qdc_status qdc_visibility(const double* phi, const double* intensity, size_t n,
                                  double* visibility);

/* ---------------------------------------------------------------- */
/* Circuits                                                          */
/* ---------------------------------------------------------------- */

/* JSON description (scheme, parameters, ordered op list) of the circuit the
 * given scheme/parameters build. scheme is "QDCE" or "EA-QDCE". Release
 * *json_out with qdc_string_free. */
QDC_API qdc_status qdc_circuit_json(const char* scheme, double alpha, double phi,
                                    char** json_out);

/* ---------------------------------------------------------------- */
/* Noise models and sweep configs                                    */
/* ---------------------------------------------------------------- */

typedef struct qdc_noise_model qdc_noise_model;

QDC_API qdc_status qdc_noise_model_load(const char* path, qdc_noise_model** out);
QDC_API void qdc_noise_model_free(qdc_noise_model* noise);

typedef struct qdc_config qdc_config;

/* A fresh config: scheme QDCE, exact mode, shots 8192, repetitions 3,
 * seed 1, no noise, empty grids (grids must be set before running). */
QDC_API qdc_status qdc_config_create(qdc_config** out);
QDC_API void qdc_config_free(qdc_config* config);

/* Load a JSON sweep config (strict schema; unknown keys rejected). */
QDC_API qdc_status qdc_config_load(const char* path, qdc_config** out);

QDC_API qdc_status qdc_config_set_scheme(qdc_config* config, const char* scheme);
QDC_API qdc_status qdc_config_set_alpha_values(qdc_config* config, const double* values,
                                               size_t n);
QDC_API qdc_status qdc_config_set_phi_values(qdc_config* config, const double* values,
                                             size_t n);
QDC_API qdc_status qdc_config_set_mode(qdc_config* config, const char* mode);
QDC_API qdc_status qdc_config_set_shots(qdc_config* config, long long shots);
QDC_API qdc_status qdc_config_set_repetitions(qdc_config* config, long long repetitions);
QDC_API qdc_status qdc_config_set_seed(qdc_config* config, uint64_t seed);

/* Attach a copy of the noise model; NULL detaches. */
QDC_API qdc_status qdc_config_set_noise(qdc_config* config, const qdc_noise_model* noise);

/* Canonical JSON echo of the config. Release with qdc_string_free. */
QDC_API qdc_status qdc_config_to_json(const qdc_config* config, char** json_out);

/* ---------------------------------------------------------------- */
/* Sweeps                                                            */
/* ---------------------------------------------------------------- */

typedef struct qdc_records qdc_records;

typedef struct qdc_record {
  const char* scheme; /* static storage, do not free */
  double alpha;
  double phi;
  int branch;         /* post-selection branch, -1 when not post-selected */
  const char* mode;   /* static storage, do not free */
  double e0;
  double e1;
  double joint_e0;    /* valid when has_branch_fields */
  double branch_prob; /* valid when has_branch_fields */
  int has_branch_fields;
  long long shots;    /* valid when has_shot_stats */
  double stderr0;     /* valid when has_shot_stats */
  double stderr1;     /* valid when has_shot_stats */
  int has_shot_stats;
} qdc_record;

/* One record per sweep point (two per point for EA-QDCE, one per branch).
 * Deterministic: identical configs produce identical records. */
QDC_API qdc_status qdc_run_sweep(const qdc_config* config, qdc_records** out);
QDC_API void qdc_records_free(qdc_records* records);
QDC_API size_t qdc_records_count(const qdc_records* records);
QDC_API qdc_status qdc_records_get(const qdc_records* records, size_t index, qdc_record* out);

/* New handle holding only the records of one post-selection branch. */
QDC_API qdc_status qdc_records_filter_branch(const qdc_records* records, int branch,
                                             qdc_records** out);

/* CSV with header scheme,alpha,phi,branch,mode,e0,e1,joint_e0,branch_prob,
 * shots,stderr0,stderr1; 12 significant digits; rows sorted by
 * (alpha, phi, branch). Byte-identical for identical record lists. */
QDC_API qdc_status qdc_records_write_csv(const qdc_records* records, const char* path);
QDC_API qdc_status qdc_records_to_csv(const qdc_records* records, char** csv_out);

/* ---------------------------------------------------------------- */
/* QM vs hidden-variable comparison                                  */
/* ---------------------------------------------------------------- */

typedef struct qdc_comparison qdc_comparison;

QDC_API qdc_status qdc_compare_qm_hv(const double* alpha_values, size_t n_alpha,
                                     const double* phi_values, size_t n_phi,
                                     qdc_comparison** out);
QDC_API void qdc_comparison_free(qdc_comparison* cmp);
QDC_API qdc_status qdc_comparison_size(const qdc_comparison* cmp, size_t* n_alpha,
                                       size_t* n_phi);

/* Max over the phase grid of |QM branch-0 conditional - HV| for one alpha. */
QDC_API qdc_status qdc_comparison_max_abs_diff(const qdc_comparison* cmp, size_t alpha_index,
                                               double* out);

/* Copy out curves for plotting; `values` must hold n_phi doubles. */
QDC_API qdc_status qdc_comparison_hv_curve(const qdc_comparison* cmp, double* values,
                                           size_t n_phi);
QDC_API qdc_status qdc_comparison_qm_curve(const qdc_comparison* cmp, size_t alpha_index,
                                           double* values, size_t n_phi);

QDC_API qdc_status qdc_comparison_write_csv(const qdc_comparison* cmp, const char* path);

/* Plain-text report: per-alpha max divergence plus the labeled discrepancy
 * of the closed-form expression against the simulated circuit. */
QDC_API qdc_status qdc_comparison_write_report(const qdc_comparison* cmp, const char* path);

/* ---------------------------------------------------------------- */
/* Plots and manifests                                               */
/* ---------------------------------------------------------------- */

typedef struct qdc_series {
  const char* label;
  const double* x;
  const double* y;
  size_t n;
} qdc_series;

QDC_API qdc_status qdc_svg_write_lineplot(const char* path, const char* title,
                                          const char* x_label, const char* y_label,
                                          const qdc_series* series, size_t n_series);

/* values is row-major n_rows x n_cols, each value in [0, 1]; row_coords /
 * col_coords label the axes (alpha / phi). */
QDC_API qdc_status qdc_svg_write_heatmap(const char* path, const char* title,
                                         const char* x_label, const char* y_label,
                                         const double* values, size_t n_rows, size_t n_cols,
                                         const double* row_coords, const double* col_coords);

/* Provenance manifest: tool version, UTC timestamp, config echo and hash,
 * output file list. */
QDC_API qdc_status qdc_manifest_write(const qdc_config* config,
                                      const char* const* output_paths, size_t n_outputs,
                                      const char* path);

#ifdef __cplusplus
}
#endif

#endif /* QDC_QDC_H */
