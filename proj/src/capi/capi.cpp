#include "tendex/tendex.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "core/adf.hpp"
#include "core/criteria.hpp"
#include "core/csv.hpp"
#include "core/dft.hpp"
#include "core/errors.hpp"
#include "core/hp.hpp"
#include "core/itd.hpp"
#include "core/runs.hpp"
#include "core/signals.hpp"

using namespace tendex;

struct tendex_series {
    TimeSeries impl;
};
struct tendex_decomposition {
    ItdDecomposition impl;
};
struct tendex_split {
    TendencySplit impl;
};
struct tendex_hp_result {
    HpResult impl;
};
struct tendex_spectrum {
    SpectrumReport impl;
};

namespace {

thread_local std::string g_last_error;

tendex_status to_status(Status s) {
    switch (s) {
        case Status::Ok: return TENDEX_OK;
        case Status::InvalidArgument: return TENDEX_ERR_INVALID_ARGUMENT;
        case Status::Io: return TENDEX_ERR_IO;
        case Status::Parse: return TENDEX_ERR_PARSE;
        case Status::SeriesTooShort: return TENDEX_ERR_SERIES_TOO_SHORT;
        case Status::RankDeficient: return TENDEX_ERR_RANK_DEFICIENT;
        case Status::Numeric: return TENDEX_ERR_NUMERIC;
    }
    return TENDEX_ERR_NUMERIC;
}

tendex_status fail(tendex_status code, const char* message) {
    g_last_error = message;
    return code;
}

/// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
tendex_status guarded(Fn&& fn) {
    try {
        fn();
        return TENDEX_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.status());
    } catch (const std::bad_alloc&) {
        g_last_error = "OutOfMemory";
        return TENDEX_ERR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TENDEX_ERR_NUMERIC;
    }
}

tendex_status make_series(TimeSeries&& values, tendex_series** out) {
    *out = new tendex_series{std::move(values)};
    return TENDEX_OK;
}

BoundaryPolicy to_boundary(tendex_boundary b) {
    return b == TENDEX_BOUNDARY_PERIODIC ? BoundaryPolicy::Periodic : BoundaryPolicy::Free;
}

Criterion to_criterion(tendex_criterion c) {
    return c == TENDEX_CRITERION_MAXEP ? Criterion::MaxEp : Criterion::Stc;
}

RunConfig to_run_config(const tendex_run_config& c) {
    RunConfig cfg;
    cfg.boundary = to_boundary(c.boundary);
    cfg.criterion = to_criterion(c.criterion);
    cfg.p_star = c.p_star;
    cfg.n_lags = c.n_lags;
    cfg.hp_lambda = c.hp_lambda;
    cfg.seed = c.seed;
    cfg.max_bin = c.max_bin;
    return cfg;
}

} // namespace

extern "C" {

const char* tendex_version(void) { return "0.1.0"; }

const char* tendex_last_error(void) { return g_last_error.c_str(); }

/* ---- series ---------------------------------------------------------- */

tendex_status tendex_series_create(const double* values, size_t n, tendex_series** out) {
    if (!values || !out || n == 0)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_series_create: null or empty input");
    return guarded([&] {
        TimeSeries s(std::vector<double>(values, values + n));
        validate_series(s);
        make_series(std::move(s), out);
    });
}

void tendex_series_destroy(tendex_series* series) { delete series; }

size_t tendex_series_size(const tendex_series* series) { return series ? series->impl.size() : 0; }

const double* tendex_series_values(const tendex_series* series) {
    return series ? series->impl.data() : nullptr;
}

tendex_status tendex_series_read_csv(const char* path, const char* column, int column_index,
                                     int has_header, char delimiter, tendex_series** out) {
    if (!path || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_series_read_csv: null argument");
    return guarded([&] {
        CsvSpec spec;
        spec.path = path;
        if (column) spec.column = column;
        spec.column_index = column_index;
        spec.header = has_header != 0;
        spec.delimiter = delimiter;
        make_series(read_series(spec), out);
    });
}

tendex_status tendex_series_write_csv(const tendex_series* series, const char* path) {
    if (!series || !path)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_series_write_csv: null argument");
    return guarded([&] { write_series_csv(path, series->impl); });
}

/* ---- generators ------------------------------------------------------ */

tendex_status tendex_generate_sde(uint64_t seed, size_t n, double dt, double y0,
                                  double noise_variance, tendex_series** out) {
    if (!out) return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_generate_sde: null output");
    return guarded([&] {
        make_series(gen_sde({seed, n, dt, y0, noise_variance}), out);
    });
}

tendex_status tendex_generate_noisy_sine(uint64_t seed, double noise_variance,
                                         tendex_series** out) {
    if (!out) return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_generate_noisy_sine: null output");
    return guarded([&] { make_series(gen_noisy_sine({seed, noise_variance}), out); });
}

tendex_status tendex_generate_multiscale(uint64_t seed, size_t n, tendex_series** out) {
    if (!out) return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_generate_multiscale: null output");
    return guarded([&] {
        MultiscaleParams params;
        params.seed = seed;
        params.n = n;
        make_series(gen_multiscale(params), out);
    });
}

tendex_status tendex_generate_chirp(tendex_series** out) {
    if (!out) return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_generate_chirp: null output");
    return guarded([&] { make_series(gen_chirp(), out); });
}

/* ---- decomposition ---------------------------------------------------- */

tendex_status tendex_decompose(const tendex_series* series, tendex_boundary boundary,
                               tendex_decomposition** out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_decompose: null argument");
    return guarded([&] {
        *out = new tendex_decomposition{decompose(series->impl, to_boundary(boundary))};
    });
}

void tendex_decomposition_destroy(tendex_decomposition* decomp) { delete decomp; }

size_t tendex_decomposition_depth(const tendex_decomposition* decomp) {
    return decomp ? decomp->impl.depth() : 0;
}

tendex_status tendex_decomposition_baseline(const tendex_decomposition* decomp, size_t level,
                                            tendex_series** out) {
    if (!decomp || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_decomposition_baseline: null argument");
    return guarded([&] { make_series(TimeSeries(decomp->impl.baseline(level)), out); });
}

tendex_status tendex_decomposition_rotation(const tendex_decomposition* decomp, size_t level,
                                            tendex_series** out) {
    if (!decomp || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_decomposition_rotation: null argument");
    return guarded([&] { make_series(TimeSeries(decomp->impl.rotation(level)), out); });
}

tendex_status tendex_reconstruct(const tendex_decomposition* decomp, tendex_series** out) {
    if (!decomp || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_reconstruct: null argument");
    return guarded([&] { make_series(reconstruct(decomp->impl), out); });
}

/* ---- criteria ---------------------------------------------------------- */

tendex_status tendex_adf_test(const tendex_series* series, int n_lags, tendex_adf_result* out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_adf_test: null argument");
    return guarded([&] {
        const AdfResult r = adf_pvalue(series->impl, n_lags);
        out->gamma_hat = r.gamma_hat;
        out->t_stat = r.t_stat;
        out->p_value = r.p_value;
        out->n_lags = r.n_lags;
        out->n_obs = r.n_obs;
    });
}

tendex_status tendex_prominence(const tendex_series* series, size_t position, double* out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_prominence: null argument");
    return guarded([&] { *out = prominence(series->impl, position); });
}

tendex_status tendex_maxep(const tendex_series* series, double* out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_maxep: null argument");
    return guarded([&] { *out = maxep(series->impl); });
}

tendex_status tendex_tendency(const tendex_series* series, tendex_criterion criterion,
                              tendex_boundary boundary, double p_star, int n_lags,
                              tendex_split** out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_tendency: null argument");
    return guarded([&] {
        TendencyParams params;
        params.criterion = to_criterion(criterion);
        params.boundary = to_boundary(boundary);
        params.p_star = p_star;
        params.n_lags = n_lags;
        *out = new tendex_split{tendency(series->impl, params)};
    });
}

void tendex_split_destroy(tendex_split* split) { delete split; }

int tendex_split_j_star(const tendex_split* split) { return split ? split->impl.j_star : 0; }

size_t tendex_split_depth(const tendex_split* split) { return split ? split->impl.depth : 0; }

int tendex_split_fallback_used(const tendex_split* split) {
    return split && split->impl.trace.fallback_used ? 1 : 0;
}

tendex_status tendex_split_tendency(const tendex_split* split, tendex_series** out) {
    if (!split || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_split_tendency: null argument");
    return guarded([&] { make_series(TimeSeries(split->impl.tendency), out); });
}

tendex_status tendex_split_residual(const tendex_split* split, tendex_series** out) {
    if (!split || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_split_residual: null argument");
    return guarded([&] { make_series(TimeSeries(split->impl.residual), out); });
}

size_t tendex_split_trace_size(const tendex_split* split) {
    return split ? split->impl.trace.per_level.size() : 0;
}

tendex_status tendex_split_trace_entry(const tendex_split* split, size_t index, int* level,
                                       double* score) {
    if (!split || !level || !score)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_split_trace_entry: null argument");
    if (index >= split->impl.trace.per_level.size())
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_split_trace_entry: index out of range");
    *level = split->impl.trace.per_level[index].level;
    *score = split->impl.trace.per_level[index].score;
    return TENDEX_OK;
}

/* ---- HP filter ---------------------------------------------------------- */

tendex_status tendex_hp_filter(const tendex_series* series, double lambda,
                               tendex_hp_result** out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_hp_filter: null argument");
    return guarded([&] { *out = new tendex_hp_result{hp_trend(series->impl, lambda)}; });
}

void tendex_hp_result_destroy(tendex_hp_result* result) { delete result; }

tendex_status tendex_hp_trend(const tendex_hp_result* result, tendex_series** out) {
    if (!result || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_hp_trend: null argument");
    return guarded([&] { make_series(TimeSeries(result->impl.trend), out); });
}

tendex_status tendex_hp_residual(const tendex_hp_result* result, tendex_series** out) {
    if (!result || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_hp_residual: null argument");
    return guarded([&] { make_series(TimeSeries(result->impl.residual), out); });
}

double tendex_hp_gain(double omega, double lambda) { return hp_gain(omega, lambda); }

/* ---- spectra ------------------------------------------------------------ */

tendex_status tendex_dft_modulus(const tendex_series* series, tendex_spectrum** out) {
    if (!series || !out)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_dft_modulus: null argument");
    return guarded([&] { *out = new tendex_spectrum{dft_modulus(series->impl)}; });
}

void tendex_spectrum_destroy(tendex_spectrum* spectrum) { delete spectrum; }

size_t tendex_spectrum_size(const tendex_spectrum* spectrum) {
    return spectrum ? spectrum->impl.modulus.size() : 0;
}

const double* tendex_spectrum_modulus(const tendex_spectrum* spectrum) {
    return spectrum ? spectrum->impl.modulus.data() : nullptr;
}

/* ---- run pipelines ------------------------------------------------------ */

void tendex_run_config_default(tendex_run_config* config) {
    if (!config) return;
    config->boundary = TENDEX_BOUNDARY_FREE;
    config->criterion = TENDEX_CRITERION_STC;
    config->p_star = 0.05;
    config->n_lags = 1;
    config->hp_lambda = 1600.0;
    config->seed = 0;
    config->max_bin = 250;
}

tendex_status tendex_run_decompose(const tendex_series* series, const tendex_run_config* config,
                                   const char* out_dir) {
    if (!series || !config || !out_dir)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_run_decompose: null argument");
    return guarded([&] { run_decompose(series->impl, to_run_config(*config), out_dir); });
}

tendex_status tendex_run_tendency(const tendex_series* series, const tendex_run_config* config,
                                  const char* out_dir, int write_plot, int* j_star_out) {
    if (!series || !config || !out_dir)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_run_tendency: null argument");
    return guarded([&] {
        const int j = run_tendency(series->impl, to_run_config(*config), out_dir, write_plot != 0);
        if (j_star_out) *j_star_out = j;
    });
}

tendex_status tendex_run_hp(const tendex_series* series, const tendex_run_config* config,
                            const char* out_dir, int write_plot) {
    if (!series || !config || !out_dir)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_run_hp: null argument");
    return guarded([&] { run_hp(series->impl, to_run_config(*config), out_dir, write_plot != 0); });
}

tendex_status tendex_run_spectrum(const tendex_series* series, const tendex_series* residual,
                                  const tendex_run_config* config, const char* out_dir) {
    if (!series || !config || !out_dir)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_run_spectrum: null argument");
    return guarded([&] {
        std::optional<TimeSeries> res;
        if (residual) res = residual->impl;
        run_spectrum(series->impl, res, to_run_config(*config), out_dir);
    });
}

tendex_status tendex_run_report(const tendex_series* series, const tendex_run_config* config,
                                const char* out_dir, int* stc_j_star_out, int* maxep_j_star_out,
                                size_t* depth_out) {
    if (!series || !config || !out_dir)
        return fail(TENDEX_ERR_INVALID_ARGUMENT, "tendex_run_report: null argument");
    return guarded([&] {
        const ReportSummary summary = run_report(series->impl, to_run_config(*config), out_dir);
        if (stc_j_star_out) *stc_j_star_out = summary.stc_j_star;
        if (maxep_j_star_out) *maxep_j_star_out = summary.maxep_j_star;
        if (depth_out) *depth_out = summary.depth;
    });
}

} /* extern "C" */
