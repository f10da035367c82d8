// tendex command line: wires the generators, decomposition, criteria, HP
// filter and spectra of libtendex into reproducible runs. Talks to the
// library exclusively through the public C API.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "tendex/tendex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

using SeriesPtr = std::unique_ptr<tendex_series, decltype(&tendex_series_destroy)>;

SeriesPtr wrap(tendex_series* s) { return SeriesPtr(s, &tendex_series_destroy); }

int exit_code_for(tendex_status status) {
    switch (status) {
        case TENDEX_OK: return kExitOk;
        case TENDEX_ERR_NUMERIC: return kExitNumeric;
        default: return kExitData;
    }
}

[[noreturn]] void die(tendex_status status) {
    std::fprintf(stderr, "tendex: %s\n", tendex_last_error());
    std::exit(exit_code_for(status));
}

void check(tendex_status status) {
    if (status != TENDEX_OK) die(status);
}

struct InputFlags {
    std::string path;
    std::string column = "value";
    bool no_header = false;
    std::string delimiter = ",";
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    cmd->add_option("--in", flags.path, "input CSV file")->required();
    cmd->add_option("--column", flags.column,
                    "value column: header name, or 0-based index if numeric");
    cmd->add_flag("--no-header", flags.no_header, "input file has no header row");
    cmd->add_option("--delimiter", flags.delimiter, "field delimiter")
        ->check(CLI::Validator(
            [](std::string& v) -> std::string {
                return v.size() == 1 ? std::string{} : "must be a single character";
            },
            "CHAR"));
}

SeriesPtr read_input(const InputFlags& flags) {
    const bool numeric =
        !flags.column.empty() &&
        std::all_of(flags.column.begin(), flags.column.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    const char* column_name = nullptr;
    int column_index = 0;
    if (numeric)
        column_index = std::atoi(flags.column.c_str());
    else
        column_name = flags.column.c_str();
    // without a header a named column cannot be resolved; fall back to column 0
    if (flags.no_header && !numeric) column_name = nullptr;

    tendex_series* raw = nullptr;
    check(tendex_series_read_csv(flags.path.c_str(), column_name, column_index,
                                 flags.no_header ? 0 : 1, flags.delimiter[0], &raw));
    return wrap(raw);
}

std::uint64_t env_seed_default() {
    const char* env = std::getenv("TENDEX_SEED");
    if (!env || !*env) return 0;
    return std::strtoull(env, nullptr, 10);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tendency extraction for time series (intrinsic time decomposition, "
                 "STC/MaxEP selection, Hodrick-Prescott comparison)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(tendex_version()); });

    tendex_run_config config;
    tendex_run_config_default(&config);
    config.seed = env_seed_default();

    std::string boundary = "free";
    auto boundary_check = CLI::IsMember({"free", "periodic"});

    // generate
    auto* c_gen = app.add_subcommand("generate", "generate one of the built-in signals");
    std::string gen_kind;
    std::uint64_t gen_seed = env_seed_default();
    std::size_t gen_n = 0;
    double gen_dt = 0.05, gen_y0 = 0.5;
    std::string gen_out;
    c_gen->add_option("--kind", gen_kind, "signal kind")
        ->required()
        ->check(CLI::IsMember({"sde", "noisy-sine", "multiscale", "chirp"}));
    c_gen->add_option("--seed", gen_seed, "PRNG seed (default: $TENDEX_SEED or 0)");
    c_gen->add_option("--n", gen_n, "sample count override")->check(CLI::PositiveNumber);
    c_gen->add_option("--dt", gen_dt, "SDE time step")->check(CLI::PositiveNumber);
    c_gen->add_option("--y0", gen_y0, "SDE initial value");
    c_gen->add_option("--out", gen_out, "output CSV file")->required();

    // decompose
    auto* c_dec = app.add_subcommand("decompose", "full intrinsic time decomposition");
    InputFlags dec_in;
    std::string dec_out;
    add_input_flags(c_dec, dec_in);
    c_dec->add_option("--boundary", boundary, "boundary policy")->check(boundary_check);
    c_dec->add_option("--out", dec_out, "output directory")->required();

    // tendency
    auto* c_ten = app.add_subcommand("tendency", "decompose and split Y = T + r");
    InputFlags ten_in;
    std::string ten_out, ten_criterion;
    bool ten_plot = false;
    add_input_flags(c_ten, ten_in);
    c_ten->add_option("--criterion", ten_criterion, "selection criterion")
        ->required()
        ->check(CLI::IsMember({"stc", "maxep"}));
    c_ten->add_option("--p-star", config.p_star, "STC p-value threshold")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    c_ten->add_option("--lags", config.n_lags, "ADF lagged-difference count")
        ->check(CLI::NonNegativeNumber);
    c_ten->add_option("--boundary", boundary, "boundary policy")->check(boundary_check);
    c_ten->add_option("--out", ten_out, "output directory")->required();
    c_ten->add_flag("--plot", ten_plot, "also write plot.svg");

    // hp
    auto* c_hp = app.add_subcommand("hp", "Hodrick-Prescott trend extraction");
    InputFlags hp_in;
    std::string hp_out;
    bool hp_plot = false;
    add_input_flags(c_hp, hp_in);
    c_hp->add_option("--lambda", config.hp_lambda, "smoothing parameter")
        ->check(CLI::NonNegativeNumber);
    c_hp->add_option("--out", hp_out, "output directory")->required();
    c_hp->add_flag("--plot", hp_plot, "also write plot.svg");

    // spectrum
    auto* c_spec = app.add_subcommand("spectrum", "DFT modulus of a series (and a residual)");
    InputFlags spec_in;
    std::string spec_out, spec_residual_of;
    add_input_flags(c_spec, spec_in);
    c_spec->add_option("--residual-of", spec_residual_of,
                       "directory of a previous tendency/hp run; its split.csv residual "
                       "column is transformed as well");
    c_spec->add_option("--max-bin", config.max_bin, "truncate spectra to bins below this")
        ->check(CLI::PositiveNumber);
    c_spec->add_option("--out", spec_out, "output directory")->required();

    // report
    auto* c_rep = app.add_subcommand("report", "both criteria plus HP, with residual spectra");
    InputFlags rep_in;
    std::string rep_out;
    add_input_flags(c_rep, rep_in);
    c_rep->add_option("--p-star", config.p_star, "STC p-value threshold")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    c_rep->add_option("--lags", config.n_lags, "ADF lagged-difference count")
        ->check(CLI::NonNegativeNumber);
    c_rep->add_option("--lambda", config.hp_lambda, "HP smoothing parameter")
        ->check(CLI::NonNegativeNumber);
    c_rep->add_option("--boundary", boundary, "boundary policy")->check(boundary_check);
    c_rep->add_option("--max-bin", config.max_bin, "spectra truncation")
        ->check(CLI::PositiveNumber);
    c_rep->add_option("--out", rep_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message; 0 for --help/--version
        return code == 0 ? kExitOk : kExitUsage;
    }

    config.boundary =
        boundary == "periodic" ? TENDEX_BOUNDARY_PERIODIC : TENDEX_BOUNDARY_FREE;

    if (c_gen->parsed()) {
        config.seed = gen_seed;
        tendex_series* raw = nullptr;
        if (gen_kind == "sde") {
            check(tendex_generate_sde(gen_seed, gen_n ? gen_n : 2000, gen_dt, gen_y0, 1.0, &raw));
        } else if (gen_kind == "noisy-sine") {
            check(tendex_generate_noisy_sine(gen_seed, 0.1, &raw));
        } else if (gen_kind == "multiscale") {
            check(tendex_generate_multiscale(gen_seed, gen_n ? gen_n : 1000, &raw));
        } else {
            check(tendex_generate_chirp(&raw));
        }
        auto series = wrap(raw);
        check(tendex_series_write_csv(series.get(), gen_out.c_str()));
        std::printf("wrote %s (%zu samples)\n", gen_out.c_str(), tendex_series_size(series.get()));
        return kExitOk;
    }

    if (c_dec->parsed()) {
        auto series = read_input(dec_in);
        check(tendex_run_decompose(series.get(), &config, dec_out.c_str()));
        std::printf("wrote %s\n", dec_out.c_str());
        return kExitOk;
    }

    if (c_ten->parsed()) {
        config.criterion =
            ten_criterion == "maxep" ? TENDEX_CRITERION_MAXEP : TENDEX_CRITERION_STC;
        auto series = read_input(ten_in);
        int j_star = 0;
        check(tendex_run_tendency(series.get(), &config, ten_out.c_str(), ten_plot ? 1 : 0,
                                  &j_star));
        std::printf("criterion=%s j*=%d -> %s\n", ten_criterion.c_str(), j_star, ten_out.c_str());
        return kExitOk;
    }

    if (c_hp->parsed()) {
        auto series = read_input(hp_in);
        check(tendex_run_hp(series.get(), &config, hp_out.c_str(), hp_plot ? 1 : 0));
        std::printf("lambda=%g -> %s\n", config.hp_lambda, hp_out.c_str());
        return kExitOk;
    }

    if (c_spec->parsed()) {
        auto series = read_input(spec_in);
        SeriesPtr residual = wrap(nullptr);
        if (!spec_residual_of.empty()) {
            const std::string split = spec_residual_of + "/split.csv";
            tendex_series* raw = nullptr;
            check(tendex_series_read_csv(split.c_str(), "residual", 0, 1, ',', &raw));
            residual = wrap(raw);
        }
        check(tendex_run_spectrum(series.get(), residual.get(), &config, spec_out.c_str()));
        std::printf("wrote %s\n", spec_out.c_str());
        return kExitOk;
    }

    if (c_rep->parsed()) {
        auto series = read_input(rep_in);
        int stc_j = 0, maxep_j = 0;
        size_t depth = 0;
        check(tendex_run_report(series.get(), &config, rep_out.c_str(), &stc_j, &maxep_j, &depth));
        std::printf("depth=%zu stc_j*=%d maxep_j*=%d -> %s\n", depth, stc_j, maxep_j,
                    rep_out.c_str());
        return kExitOk;
    }

    return kExitUsage;
}
