// Exercises the public shared-library surface exactly as an external C
// client would: opaque handles, status codes, thread-local error messages.

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "tendex/tendex.h"

namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("tendex_capi_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("capi: series lifecycle and validation") {
    const double values[4] = {0.0, 2.0, 0.0, 1.0};
    tendex_series* s = nullptr;
    REQUIRE(tendex_series_create(values, 4, &s) == TENDEX_OK);
    CHECK(tendex_series_size(s) == 4);
    CHECK(std::memcmp(tendex_series_values(s), values, sizeof(values)) == 0);
    tendex_series_destroy(s);

    CHECK(tendex_series_create(nullptr, 4, &s) == TENDEX_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(tendex_last_error()) > 0);

    const double bad[2] = {1.0, std::nan("")};
    CHECK(tendex_series_create(bad, 2, &s) == TENDEX_ERR_INVALID_ARGUMENT);
    CHECK(std::string(tendex_last_error()).find("NonFiniteValue") != std::string::npos);
}

TEST_CASE("capi: decompose, accessors, reconstruct") {
    tendex_series* chirp = nullptr;
    REQUIRE(tendex_generate_chirp(&chirp) == TENDEX_OK);
    REQUIRE(tendex_series_size(chirp) == 201);

    tendex_decomposition* d = nullptr;
    REQUIRE(tendex_decompose(chirp, TENDEX_BOUNDARY_FREE, &d) == TENDEX_OK);
    const size_t depth = tendex_decomposition_depth(d);
    CHECK(depth >= 2);

    tendex_series* b0 = nullptr;
    REQUIRE(tendex_decomposition_baseline(d, 0, &b0) == TENDEX_OK);
    CHECK(std::memcmp(tendex_series_values(b0), tendex_series_values(chirp),
                      201 * sizeof(double)) == 0);
    tendex_series_destroy(b0);

    tendex_series* out_of_range = nullptr;
    CHECK(tendex_decomposition_rotation(d, 0, &out_of_range) == TENDEX_ERR_INVALID_ARGUMENT);
    CHECK(tendex_decomposition_rotation(d, depth + 1, &out_of_range) ==
          TENDEX_ERR_INVALID_ARGUMENT);

    tendex_series* rec = nullptr;
    REQUIRE(tendex_reconstruct(d, &rec) == TENDEX_OK);
    const double* y = tendex_series_values(chirp);
    const double* r = tendex_series_values(rec);
    double worst = 0.0, scale = 0.0;
    for (size_t i = 0; i < 201; ++i) {
        worst = std::max(worst, std::fabs(y[i] - r[i]));
        scale = std::max(scale, std::fabs(y[i]));
    }
    CHECK(worst <= 1e-9 * scale);

    tendex_series_destroy(rec);
    tendex_decomposition_destroy(d);
    tendex_series_destroy(chirp);
}

TEST_CASE("capi: tendency split and trace on the chirp") {
    tendex_series* chirp = nullptr;
    REQUIRE(tendex_generate_chirp(&chirp) == TENDEX_OK);

    tendex_split* split = nullptr;
    REQUIRE(tendex_tendency(chirp, TENDEX_CRITERION_STC, TENDEX_BOUNDARY_FREE, 0.05, 1,
                            &split) == TENDEX_OK);
    CHECK(tendex_split_j_star(split) == 2);
    CHECK(tendex_split_fallback_used(split) == 0);
    CHECK(tendex_split_depth(split) >= 2);

    tendex_series* trend = nullptr;
    tendex_series* residual = nullptr;
    REQUIRE(tendex_split_tendency(split, &trend) == TENDEX_OK);
    REQUIRE(tendex_split_residual(split, &residual) == TENDEX_OK);
    const double* y = tendex_series_values(chirp);
    const double* t = tendex_series_values(trend);
    const double* r = tendex_series_values(residual);
    for (size_t i = 0; i < tendex_series_size(chirp); ++i) CHECK(r[i] == y[i] - t[i]);

    REQUIRE(tendex_split_trace_size(split) >= 1);
    int level = 0;
    double score = 0.0;
    REQUIRE(tendex_split_trace_entry(split, 0, &level, &score) == TENDEX_OK);
    CHECK(level == 1);
    CHECK(score >= 0.0);
    CHECK(tendex_split_trace_entry(split, 999, &level, &score) == TENDEX_ERR_INVALID_ARGUMENT);

    tendex_series_destroy(trend);
    tendex_series_destroy(residual);
    tendex_split_destroy(split);

    tendex_split* maxep_split = nullptr;
    REQUIRE(tendex_tendency(chirp, TENDEX_CRITERION_MAXEP, TENDEX_BOUNDARY_FREE, 0.05, 1,
                            &maxep_split) == TENDEX_OK);
    CHECK(tendex_split_j_star(maxep_split) == 1);
    tendex_split_destroy(maxep_split);
    tendex_series_destroy(chirp);
}

TEST_CASE("capi: adf, maxep, prominence") {
    tendex_series* noise = nullptr;
    REQUIRE(tendex_generate_noisy_sine(7, 0.1, &noise) == TENDEX_OK);
    tendex_adf_result adf;
    REQUIRE(tendex_adf_test(noise, 1, &adf) == TENDEX_OK);
    CHECK(adf.n_obs == 626);
    CHECK(adf.p_value > 0.0);
    CHECK(adf.p_value < 1.0);
    CHECK(adf.n_lags == 1);
    tendex_series_destroy(noise);

    const double tent[5] = {0.0, 2.0, 0.0, 5.0, 0.0};
    tendex_series* s = nullptr;
    REQUIRE(tendex_series_create(tent, 5, &s) == TENDEX_OK);
    double m = 0.0;
    REQUIRE(tendex_maxep(s, &m) == TENDEX_OK);
    CHECK(m == 5.0);
    double p = 0.0;
    REQUIRE(tendex_prominence(s, 1, &p) == TENDEX_OK);
    CHECK(p == 2.0);
    CHECK(tendex_prominence(s, 0, &p) == TENDEX_ERR_INVALID_ARGUMENT);
    tendex_series_destroy(s);
}

TEST_CASE("capi: hp filter and gain") {
    const double line[6] = {1, 3, 5, 7, 9, 11};
    tendex_series* s = nullptr;
    REQUIRE(tendex_series_create(line, 6, &s) == TENDEX_OK);
    tendex_hp_result* hp = nullptr;
    REQUIRE(tendex_hp_filter(s, 1600.0, &hp) == TENDEX_OK);
    tendex_series* trend = nullptr;
    REQUIRE(tendex_hp_trend(hp, &trend) == TENDEX_OK);
    CHECK(std::memcmp(tendex_series_values(trend), line, sizeof(line)) == 0);
    tendex_series_destroy(trend);
    tendex_hp_result_destroy(hp);

    CHECK(tendex_hp_filter(s, -2.0, &hp) == TENDEX_ERR_INVALID_ARGUMENT);
    CHECK(std::string(tendex_last_error()).find("InvalidLambda") != std::string::npos);
    tendex_series_destroy(s);

    CHECK(tendex_hp_gain(0.0, 7.0) == 0.0);
    CHECK(tendex_hp_gain(3.141592653589793, 1.0) == doctest::Approx(16.0 / 17.0));
}

TEST_CASE("capi: spectrum handle") {
    const double c[8] = {2.5, 2.5, 2.5, 2.5, 2.5, 2.5, 2.5, 2.5};
    tendex_series* s = nullptr;
    REQUIRE(tendex_series_create(c, 8, &s) == TENDEX_OK);
    tendex_spectrum* spec = nullptr;
    REQUIRE(tendex_dft_modulus(s, &spec) == TENDEX_OK);
    REQUIRE(tendex_spectrum_size(spec) == 8);
    CHECK(tendex_spectrum_modulus(spec)[0] == doctest::Approx(20.0));
    tendex_spectrum_destroy(spec);
    tendex_series_destroy(s);
}

TEST_CASE("capi: run pipelines publish complete directories") {
    const auto dir = temp_dir("runs");
    tendex_series* chirp = nullptr;
    REQUIRE(tendex_generate_chirp(&chirp) == TENDEX_OK);

    tendex_run_config config;
    tendex_run_config_default(&config);
    CHECK(config.hp_lambda == 1600.0);
    CHECK(config.max_bin == 250);

    int j_star = 0;
    REQUIRE(tendex_run_tendency(chirp, &config, (dir / "ten").c_str(), 1, &j_star) == TENDEX_OK);
    CHECK(j_star == 2);
    CHECK(fs::exists(dir / "ten" / "split.csv"));
    CHECK(fs::exists(dir / "ten" / "result.json"));
    CHECK(fs::exists(dir / "ten" / "plot.svg"));
    CHECK(fs::exists(dir / "ten" / "manifest.json"));
    CHECK(!fs::exists((dir / "ten").string() + ".staging"));

    int stc_j = 0, maxep_j = 0;
    size_t depth = 0;
    REQUIRE(tendex_run_report(chirp, &config, (dir / "rep").c_str(), &stc_j, &maxep_j, &depth) ==
            TENDEX_OK);
    CHECK(stc_j == 2);
    CHECK(maxep_j == 1);
    CHECK(depth >= 2);
    CHECK(fs::exists(dir / "rep" / "comparison.csv"));
    CHECK(fs::exists(dir / "rep" / "spectrum_residual_hp.csv"));
    CHECK(fs::exists(dir / "rep" / "report.svg"));

    tendex_series_destroy(chirp);
}
