#pragma once

#include <filesystem>
#include <vector>

#include "core/series.hpp"

namespace tendex {

/// Deterministic static SVG line plot: one polyline per series with a fixed
/// stroke palette; identical inputs produce byte-identical files. Series may
/// have different lengths; each is drawn against its own index.
void write_plot_svg(const std::vector<TimeSeries>& series_list,
                    const std::filesystem::path& path);

} // namespace tendex
