#pragma once

#include <cstddef>
#include <vector>

#include "core/series.hpp"

namespace tendex {

enum class ExtremumKind { Min, Max };

struct Extremum {
    std::size_t pos;
    ExtremumKind kind;
};

/// Interior strict extrema of a series, plateaus collapsed to their
/// rightmost sample. Interior kinds strictly alternate. The series
/// endpoints always participate as knots/neighbors and are exposed through
/// knot_positions(); includes_endpoints records that convention.
struct ExtremaSet {
    std::vector<Extremum> interior;
    std::size_t n = 0; ///< length of the series the set was computed from
    bool includes_endpoints = true;

    /// Knot positions: 0, interior extrema..., n-1 (a single entry when n == 1).
    std::vector<std::size_t> knot_positions() const;
};

/// Scans for interior extrema. A run of equal values is an extremum iff the
/// nearest differing values on BOTH sides are strictly below (Max) or
/// strictly above (Min); the extremum is placed at the rightmost sample of
/// the run. Runs touching either endpoint are never interior extrema.
/// Comparisons are exact; no epsilon.
ExtremaSet find_extrema(const TimeSeries& series);

} // namespace tendex
