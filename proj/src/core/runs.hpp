#pragma once

#include <filesystem>
#include <optional>

#include "core/config.hpp"
#include "core/series.hpp"

namespace tendex {

/// Results of a report run that the CLI surfaces on stdout.
struct ReportSummary {
    int stc_j_star = 0;
    int maxep_j_star = 0;
    std::size_t depth = 0;
};

/// Each run_* pipeline computes and publishes a complete output directory
/// (CSV artifacts plus manifest.json) atomically; on error nothing appears
/// at the final path.

void run_decompose(const TimeSeries& input, const RunConfig& config,
                   const std::filesystem::path& out_dir);

/// split.csv (i, input, tendency, residual), result.json with j*, the
/// per-level criterion scores and the fallback flag; plot.svg when requested.
int run_tendency(const TimeSeries& input, const RunConfig& config,
                 const std::filesystem::path& out_dir, bool write_plot);

void run_hp(const TimeSeries& input, const RunConfig& config,
            const std::filesystem::path& out_dir, bool write_plot);

/// spectrum_input.csv and, when a residual series is supplied,
/// spectrum_residual.csv; both truncated to bins < config.max_bin.
void run_spectrum(const TimeSeries& input, const std::optional<TimeSeries>& residual,
                  const RunConfig& config, const std::filesystem::path& out_dir);

/// Full comparison: the decomposition, both criteria splits, the HP split,
/// residual spectra, comparison.csv and report.svg.
ReportSummary run_report(const TimeSeries& input, const RunConfig& config,
                         const std::filesystem::path& out_dir);

} // namespace tendex
