/*
 * tendex — intrinsic time decomposition, tendency selection and
 * Hodrick-Prescott comparison for uniformly sampled time series.
 *
 * C API of the shared library. All functions that can fail return a
 * tendex_status; TENDEX_OK means success and every other value leaves a
 * human-readable message in tendex_last_error() (thread-local). Objects
 * returned through out-parameters are owned by the caller and must be
 * released with the matching *_destroy function. Handles are opaque; the
 * library never exposes its internal layout.
 */

#ifndef TENDEX_TENDEX_H
#define TENDEX_TENDEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TENDEX_BUILD)
#define TENDEX_API __declspec(dllexport)
#else
#define TENDEX_API __declspec(dllimport)
#endif
#else
#define TENDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tendex_status {
    TENDEX_OK = 0,
    TENDEX_ERR_INVALID_ARGUMENT = 1,
    TENDEX_ERR_IO = 2,
    TENDEX_ERR_PARSE = 3,
    TENDEX_ERR_SERIES_TOO_SHORT = 4,
    TENDEX_ERR_RANK_DEFICIENT = 5,
    TENDEX_ERR_NUMERIC = 6
} tendex_status;

typedef enum tendex_boundary {
    TENDEX_BOUNDARY_FREE = 0,
    TENDEX_BOUNDARY_PERIODIC = 1
} tendex_boundary;

typedef enum tendex_criterion {
    TENDEX_CRITERION_STC = 0,
    TENDEX_CRITERION_MAXEP = 1
} tendex_criterion;

typedef struct tendex_series tendex_series;
typedef struct tendex_decomposition tendex_decomposition;
typedef struct tendex_split tendex_split;
typedef struct tendex_hp_result tendex_hp_result;
typedef struct tendex_spectrum tendex_spectrum;

TENDEX_API const char* tendex_version(void);

/* Message for the most recent failure on this thread; never NULL. */
TENDEX_API const char* tendex_last_error(void);

/* ---- series ---------------------------------------------------------- */

TENDEX_API tendex_status tendex_series_create(const double* values, size_t n,
                                              tendex_series** out);
TENDEX_API void tendex_series_destroy(tendex_series* series);
TENDEX_API size_t tendex_series_size(const tendex_series* series);
/* Pointer stays valid until the series is destroyed. */
TENDEX_API const double* tendex_series_values(const tendex_series* series);

/* Reads one numeric column. `column` (header name) may be NULL, in which
 * case `column_index` selects the 0-based position. */
TENDEX_API tendex_status tendex_series_read_csv(const char* path, const char* column,
                                                int column_index, int has_header,
                                                char delimiter, tendex_series** out);
/* Writes (i, value) rows with full round-trip precision, atomically. */
TENDEX_API tendex_status tendex_series_write_csv(const tendex_series* series, const char* path);

/* ---- generators ------------------------------------------------------ */

/* Euler-Maruyama path of dY = -(Y^5 - 2Y^4 + 3Y^2) dt + dW; length n + 1. */
TENDEX_API tendex_status tendex_generate_sde(uint64_t seed, size_t n, double dt, double y0,
                                             double noise_variance, tendex_series** out);
/* sin(t) + Gaussian noise on t = 0.00..6.27 (628 samples). */
TENDEX_API tendex_status tendex_generate_noisy_sine(uint64_t seed, double noise_variance,
                                                    tendex_series** out);
/* Superposed piecewise-constant Uniform[0,1] layers at three scales. */
TENDEX_API tendex_status tendex_generate_multiscale(uint64_t seed, size_t n,
                                                    tendex_series** out);
/* Deterministic chirp 10 t^3 cos(13 t^3) sin(31 pi t), 201 samples. */
TENDEX_API tendex_status tendex_generate_chirp(tendex_series** out);

/* ---- intrinsic time decomposition ------------------------------------ */

TENDEX_API tendex_status tendex_decompose(const tendex_series* series,
                                          tendex_boundary boundary,
                                          tendex_decomposition** out);
TENDEX_API void tendex_decomposition_destroy(tendex_decomposition* decomp);
TENDEX_API size_t tendex_decomposition_depth(const tendex_decomposition* decomp);
/* Baseline B^level, level = 0..depth (0 is the input). */
TENDEX_API tendex_status tendex_decomposition_baseline(const tendex_decomposition* decomp,
                                                       size_t level, tendex_series** out);
/* Rotation R^level, level = 1..depth. */
TENDEX_API tendex_status tendex_decomposition_rotation(const tendex_decomposition* decomp,
                                                       size_t level, tendex_series** out);
/* B^D plus all rotations; equals the input to additive round-off. */
TENDEX_API tendex_status tendex_reconstruct(const tendex_decomposition* decomp,
                                            tendex_series** out);

/* ---- criteria --------------------------------------------------------- */

typedef struct tendex_adf_result {
    double gamma_hat;
    double t_stat;
    double p_value;
    int n_lags;
    int n_obs;
} tendex_adf_result;

/* Augmented Dickey-Fuller test, constant-plus-trend regression. */
TENDEX_API tendex_status tendex_adf_test(const tendex_series* series, int n_lags,
                                         tendex_adf_result* out);

/* Local prominence of the interior extremum at `position`. */
TENDEX_API tendex_status tendex_prominence(const tendex_series* series, size_t position,
                                           double* out);
/* Maximum prominence over all interior extrema; 0 when there are none. */
TENDEX_API tendex_status tendex_maxep(const tendex_series* series, double* out);

/* Decomposes and splits Y = T + r at the criterion's chosen level. */
TENDEX_API tendex_status tendex_tendency(const tendex_series* series,
                                         tendex_criterion criterion,
                                         tendex_boundary boundary, double p_star,
                                         int n_lags, tendex_split** out);
TENDEX_API void tendex_split_destroy(tendex_split* split);
TENDEX_API int tendex_split_j_star(const tendex_split* split);
TENDEX_API size_t tendex_split_depth(const tendex_split* split);
TENDEX_API int tendex_split_fallback_used(const tendex_split* split);
TENDEX_API tendex_status tendex_split_tendency(const tendex_split* split, tendex_series** out);
TENDEX_API tendex_status tendex_split_residual(const tendex_split* split, tendex_series** out);
TENDEX_API size_t tendex_split_trace_size(const tendex_split* split);
TENDEX_API tendex_status tendex_split_trace_entry(const tendex_split* split, size_t index,
                                                  int* level, double* score);

/* ---- Hodrick-Prescott filter ------------------------------------------ */

TENDEX_API tendex_status tendex_hp_filter(const tendex_series* series, double lambda,
                                          tendex_hp_result** out);
TENDEX_API void tendex_hp_result_destroy(tendex_hp_result* result);
TENDEX_API tendex_status tendex_hp_trend(const tendex_hp_result* result, tendex_series** out);
TENDEX_API tendex_status tendex_hp_residual(const tendex_hp_result* result,
                                            tendex_series** out);
/* Transfer-function gain 4L(1-cos w)^2 / (1 + 4L(1-cos w)^2). */
TENDEX_API double tendex_hp_gain(double omega, double lambda);

/* ---- spectra ----------------------------------------------------------- */

TENDEX_API tendex_status tendex_dft_modulus(const tendex_series* series,
                                            tendex_spectrum** out);
TENDEX_API void tendex_spectrum_destroy(tendex_spectrum* spectrum);
TENDEX_API size_t tendex_spectrum_size(const tendex_spectrum* spectrum);
/* Pointer stays valid until the spectrum is destroyed. */
TENDEX_API const double* tendex_spectrum_modulus(const tendex_spectrum* spectrum);

/* ---- run pipelines ------------------------------------------------------ */

/* Resolved configuration recorded verbatim in every output manifest. */
typedef struct tendex_run_config {
    tendex_boundary boundary;
    tendex_criterion criterion;
    double p_star;
    int n_lags;
    double hp_lambda;
    uint64_t seed;
    size_t max_bin;
} tendex_run_config;

TENDEX_API void tendex_run_config_default(tendex_run_config* config);

/* Each run publishes a complete output directory atomically: files are
 * staged beside the target and renamed into place after the manifest
 * (config, seed, per-file sha256) is written. */

TENDEX_API tendex_status tendex_run_decompose(const tendex_series* series,
                                              const tendex_run_config* config,
                                              const char* out_dir);
TENDEX_API tendex_status tendex_run_tendency(const tendex_series* series,
                                             const tendex_run_config* config,
                                             const char* out_dir, int write_plot,
                                             int* j_star_out);
TENDEX_API tendex_status tendex_run_hp(const tendex_series* series,
                                       const tendex_run_config* config, const char* out_dir,
                                       int write_plot);
/* `residual` may be NULL to emit the input spectrum only. */
TENDEX_API tendex_status tendex_run_spectrum(const tendex_series* series,
                                             const tendex_series* residual,
                                             const tendex_run_config* config,
                                             const char* out_dir);
TENDEX_API tendex_status tendex_run_report(const tendex_series* series,
                                           const tendex_run_config* config,
                                           const char* out_dir, int* stc_j_star_out,
                                           int* maxep_j_star_out, size_t* depth_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TENDEX_TENDEX_H */
