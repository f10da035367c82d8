#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/extrema.hpp"
#include "core/series.hpp"

namespace tendex {

enum class BoundaryPolicy { Free, Periodic };

struct Knot {
    std::size_t tau;
    double value;
};

/// Knots of a baseline: the endpoint samples plus every interior extremum,
/// positions strictly increasing.
struct KnotSet {
    std::vector<Knot> knots;
    BoundaryPolicy boundary = BoundaryPolicy::Free;
};

/// One smoothing level: B^{j-1} = B^j + R^j pointwise.
struct ItdLevel {
    int level = 0; ///< j, 1-based
    TimeSeries baseline;
    TimeSeries rotation;
    KnotSet baseline_knots;            ///< updated knots that define this baseline
    std::size_t degenerate_segments = 0; ///< segments that fell back to index interpolation
};

struct ItdDecomposition {
    TimeSeries input; ///< B^0
    std::vector<ItdLevel> levels;
    BoundaryPolicy boundary = BoundaryPolicy::Free;

    std::size_t depth() const noexcept { return levels.size(); }

    /// Baseline B^j for j = 0..depth(); j == 0 is the input itself.
    const TimeSeries& baseline(std::size_t j) const;
    /// Rotation R^j for j = 1..depth().
    const TimeSeries& rotation(std::size_t j) const;
};

/// Knots of a series: endpoints plus interior extrema with their values.
KnotSet knots_of(const TimeSeries& series, BoundaryPolicy boundary);

/// One application of the knot-update rule. Interior knot k moves to
///   1/2 * [ B_{k-1} + (tau_k - tau_{k-1}) / (tau_{k+1} - tau_{k-1}) * (B_{k+1} - B_{k-1}) ] + 1/2 * B_k,
/// all values taken from the input knots. Endpoints: Free averages each
/// endpoint with its adjacent knot; Periodic sets both endpoints to the mean
/// of the first and last input knot values. Positions are unchanged.
KnotSet knot_update(const KnotSet& knots);

struct BaselineStepResult {
    TimeSeries baseline; ///< B^{j+1}
    TimeSeries rotation; ///< R^{j+1} = B^j - B^{j+1}
    KnotSet knots;       ///< the updated knots defining the new baseline
    std::size_t degenerate_segments = 0;
};

/// One smoothing step. Between consecutive knots, for i in (tau_k, tau_{k+1}],
///   B^{j+1}(i) = B^{j+1}_k + (B^{j+1}_{k+1} - B^{j+1}_k) / (B^j_{k+1} - B^j_k) * (B^j(i) - B^j_k),
/// with the updated knot values in the numerator and the old ones in the
/// denominator and offset. Knot positions are assigned their knot values
/// directly, so B^{j+1}(tau_k) == B^{j+1}_k bit-for-bit. When adjacent old
/// knot values agree within 1e-12 * max|B^j| the segment falls back to
/// linear interpolation in the index; the occurrence is counted, not an error.
/// Throws NoInteriorExtrema when the input has none.
BaselineStepResult baseline_step(const TimeSeries& baseline, BoundaryPolicy boundary);

/// Full decomposition: iterates baseline_step until the current baseline has
/// no interior extrema. A series shorter than 3 samples yields depth 0.
/// Two safeguards against floating-point fixed points of the update map:
/// a step that reproduces the previous baseline bit-for-bit terminates the
/// iteration (the map would repeat forever), and a hard cap of 256 levels
/// raises a Numeric error.
ItdDecomposition decompose(const TimeSeries& series, BoundaryPolicy boundary);

/// B^D + sum of rotations; equals the input to additive round-off.
TimeSeries reconstruct(const ItdDecomposition& decomp);

} // namespace tendex
