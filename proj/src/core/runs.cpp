#include "core/runs.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "core/criteria.hpp"
#include "core/csv.hpp"
#include "core/dft.hpp"
#include "core/errors.hpp"
#include "core/hp.hpp"
#include "core/output.hpp"
#include "core/svg.hpp"

namespace tendex {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void stage_json(const OutputDir& out, const std::string& name, const json& j) {
    std::ofstream f(out.staged(name), std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error(Status::Io, "IoError: cannot write \"" + name + "\"");
    f << j.dump(2) << '\n';
}

json trace_to_json(const CriterionTrace& trace, std::size_t depth) {
    json j;
    j["criterion"] = criterion_name(trace.criterion);
    j["j_star"] = trace.chosen;
    j["fallback_used"] = trace.fallback_used;
    j["depth"] = depth;
    j["per_level"] = json::array();
    for (const auto& s : trace.per_level)
        j["per_level"].push_back({{"level", s.level}, {"score", s.score}});
    return j;
}

void stage_split(const OutputDir& out, const std::string& base_name, const TimeSeries& input,
                 const TimeSeries& trend, const TimeSeries& residual, const char* trend_col) {
    write_csv(out.staged(base_name),
              {{"input", input.values}, {trend_col, trend.values}, {"residual", residual.values}},
              /*with_index=*/true);
}

void stage_spectrum(const OutputDir& out, const std::string& name, const SpectrumReport& report,
                    std::size_t max_bin) {
    std::vector<CsvColumn> cols(2);
    cols[0].name = "bin";
    cols[1].name = "modulus";
    const std::size_t cut = std::min(max_bin, report.modulus.size());
    for (std::size_t k = 0; k < cut; ++k) {
        cols[0].values.push_back(static_cast<double>(k));
        cols[1].values.push_back(report.modulus[k]);
    }
    write_csv(out.staged(name), cols, /*with_index=*/false);
}

TendencySplit split_for(const TimeSeries& input, const RunConfig& config, Criterion criterion) {
    TendencyParams params;
    params.criterion = criterion;
    params.boundary = config.boundary;
    params.p_star = config.p_star;
    params.n_lags = config.n_lags;
    return tendency(input, params);
}

} // namespace

void run_decompose(const TimeSeries& input, const RunConfig& config, const fs::path& out_dir) {
    const ItdDecomposition decomp = decompose(input, config.boundary);
    write_decomposition(decomp, out_dir, config);
}

int run_tendency(const TimeSeries& input, const RunConfig& config, const fs::path& out_dir,
                 bool write_plot) {
    const TendencySplit split = split_for(input, config, config.criterion);

    OutputDir out(out_dir);
    stage_split(out, "split.csv", input, split.tendency, split.residual, "tendency");
    stage_json(out, "result.json", trace_to_json(split.trace, split.depth));
    if (write_plot) {
        TimeSeries in_labeled = input;
        if (in_labeled.label.empty()) in_labeled.label = "input";
        TimeSeries trend = split.tendency;
        trend.label = std::string("tendency-") + criterion_name(split.trace.criterion);
        write_plot_svg({in_labeled, trend}, out.staged("plot.svg"));
    }
    out.finalize(config);
    return split.j_star;
}

void run_hp(const TimeSeries& input, const RunConfig& config, const fs::path& out_dir,
            bool write_plot) {
    const HpResult hp = hp_trend(input, config.hp_lambda);

    OutputDir out(out_dir);
    stage_split(out, "split.csv", input, hp.trend, hp.residual, "trend");
    stage_json(out, "result.json", json{{"lambda", hp.lambda}});
    if (write_plot) {
        TimeSeries in_labeled = input;
        if (in_labeled.label.empty()) in_labeled.label = "input";
        TimeSeries trend = hp.trend;
        trend.label = "hp-trend";
        write_plot_svg({in_labeled, trend}, out.staged("plot.svg"));
    }
    out.finalize(config);
}

void run_spectrum(const TimeSeries& input, const std::optional<TimeSeries>& residual,
                  const RunConfig& config, const fs::path& out_dir) {
    if (residual && residual->size() != input.size())
        throw Error(Status::InvalidArgument,
                    "LengthMismatch: residual length differs from input length");

    OutputDir out(out_dir);
    stage_spectrum(out, "spectrum_input.csv", dft_modulus(input), config.max_bin);
    if (residual)
        stage_spectrum(out, "spectrum_residual.csv", dft_modulus(*residual), config.max_bin);
    out.finalize(config);
}

ReportSummary run_report(const TimeSeries& input, const RunConfig& config,
                         const fs::path& out_dir) {
    const ItdDecomposition decomp = decompose(input, config.boundary);

    ReportSummary summary;
    summary.depth = decomp.depth();

    TendencySplit stc_split, maxep_split;
    if (decomp.depth() == 0) {
        stc_split.tendency = input;
        stc_split.residual.values.assign(input.size(), 0.0);
        stc_split.trace.criterion = Criterion::Stc;
        maxep_split = stc_split;
        maxep_split.trace.criterion = Criterion::MaxEp;
    } else {
        stc_split.trace = stc_select(decomp, config.p_star, config.n_lags);
        stc_split.j_star = stc_split.trace.chosen;
        stc_split.tendency = decomp.baseline(static_cast<std::size_t>(stc_split.j_star));
        maxep_split.trace = maxep_select(decomp);
        maxep_split.j_star = maxep_split.trace.chosen;
        maxep_split.tendency = decomp.baseline(static_cast<std::size_t>(maxep_split.j_star));
        for (auto* split : {&stc_split, &maxep_split}) {
            split->residual.values.resize(input.size());
            for (std::size_t i = 0; i < input.size(); ++i)
                split->residual.values[i] = input[i] - split->tendency[i];
        }
    }
    summary.stc_j_star = stc_split.j_star;
    summary.maxep_j_star = maxep_split.j_star;

    const HpResult hp = hp_trend(input, config.hp_lambda);

    OutputDir out(out_dir);
    stage_decomposition_files(decomp, out);
    stage_split(out, "stc_split.csv", input, stc_split.tendency, stc_split.residual, "tendency");
    stage_split(out, "maxep_split.csv", input, maxep_split.tendency, maxep_split.residual,
                "tendency");
    stage_split(out, "hp_split.csv", input, hp.trend, hp.residual, "trend");
    stage_json(out, "stc_result.json", trace_to_json(stc_split.trace, decomp.depth()));
    stage_json(out, "maxep_result.json", trace_to_json(maxep_split.trace, decomp.depth()));
    stage_json(out, "hp_result.json", json{{"lambda", hp.lambda}});

    const ResidualSpectra spectra =
        residual_spectrum_report(input, stc_split.residual, hp.residual, config.max_bin);
    stage_spectrum(out, "spectrum_input.csv", spectra.original, config.max_bin);
    stage_spectrum(out, "spectrum_residual_stc.csv", spectra.itd_residual, config.max_bin);
    stage_spectrum(out, "spectrum_residual_hp.csv", spectra.hp_residual, config.max_bin);

    write_csv(out.staged("comparison.csv"),
              {{"input", input.values},
               {"stc_tendency", stc_split.tendency.values},
               {"stc_residual", stc_split.residual.values},
               {"maxep_tendency", maxep_split.tendency.values},
               {"maxep_residual", maxep_split.residual.values},
               {"hp_trend", hp.trend.values},
               {"hp_residual", hp.residual.values}},
              /*with_index=*/true);

    {
        TimeSeries in_labeled = input;
        if (in_labeled.label.empty()) in_labeled.label = "input";
        TimeSeries t1 = stc_split.tendency;
        t1.label = "tendency-stc";
        TimeSeries t2 = maxep_split.tendency;
        t2.label = "tendency-maxep";
        TimeSeries t3 = hp.trend;
        t3.label = "hp-trend";
        write_plot_svg({in_labeled, t1, t2, t3}, out.staged("report.svg"));
    }
    out.finalize(config);
    return summary;
}

} // namespace tendex
