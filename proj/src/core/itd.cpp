#include "core/itd.hpp"

#include <cassert>
#include <cmath>

#include "core/errors.hpp"

namespace tendex {

namespace {
constexpr std::size_t kMaxLevels = 256;
}

const TimeSeries& ItdDecomposition::baseline(std::size_t j) const {
    if (j == 0) return input;
    if (j > levels.size())
        throw Error(Status::InvalidArgument,
                    "LevelOutOfRange: baseline level " + std::to_string(j) + " exceeds depth " +
                        std::to_string(levels.size()));
    return levels[j - 1].baseline;
}

const TimeSeries& ItdDecomposition::rotation(std::size_t j) const {
    if (j == 0 || j > levels.size())
        throw Error(Status::InvalidArgument,
                    "LevelOutOfRange: rotation level " + std::to_string(j) + " not in 1.." +
                        std::to_string(levels.size()));
    return levels[j - 1].rotation;
}

KnotSet knots_of(const TimeSeries& series, BoundaryPolicy boundary) {
    KnotSet ks;
    ks.boundary = boundary;
    const auto positions = find_extrema(series).knot_positions();
    ks.knots.reserve(positions.size());
    for (std::size_t p : positions) ks.knots.push_back({p, series[p]});
    return ks;
}

KnotSet knot_update(const KnotSet& knots) {
    const auto& k = knots.knots;
    if (k.size() < 2)
        throw Error(Status::InvalidArgument, "TooFewKnots: knot update needs at least 2 knots");

    KnotSet out = knots;
    const std::size_t last = k.size() - 1;
    for (std::size_t m = 1; m < last; ++m) {
        const double dt_prev = static_cast<double>(k[m].tau - k[m - 1].tau);
        const double dt_span = static_cast<double>(k[m + 1].tau - k[m - 1].tau);
        assert(dt_span > 0.0); // tau strictly increasing
        const double w = dt_prev / dt_span;
        out.knots[m].value =
            0.5 * (k[m - 1].value + w * (k[m + 1].value - k[m - 1].value)) + 0.5 * k[m].value;
    }
    if (knots.boundary == BoundaryPolicy::Free) {
        out.knots[0].value = 0.5 * (k[1].value + k[0].value);
        out.knots[last].value = 0.5 * (k[last - 1].value + k[last].value);
    } else {
        const double mean = 0.5 * (k[0].value + k[last].value);
        out.knots[0].value = mean;
        out.knots[last].value = mean;
    }
    return out;
}

BaselineStepResult baseline_step(const TimeSeries& baseline, BoundaryPolicy boundary) {
    const auto extrema = find_extrema(baseline);
    if (extrema.interior.empty())
        throw Error(Status::InvalidArgument,
                    "NoInteriorExtrema: baseline has no interior extrema; decomposition is complete");

    const std::size_t n = baseline.size();
    KnotSet old_knots;
    old_knots.boundary = boundary;
    {
        auto positions = extrema.knot_positions();
        old_knots.knots.reserve(positions.size());
        for (std::size_t p : positions) old_knots.knots.push_back({p, baseline[p]});
    }
    KnotSet new_knots = knot_update(old_knots);

    BaselineStepResult res;
    res.knots = new_knots;
    res.baseline.values.resize(n);
    res.rotation.values.resize(n);

    const double eps_den = 1e-12 * max_abs(baseline);
    auto& b = res.baseline.values;
    b[0] = new_knots.knots[0].value;
    for (std::size_t seg = 0; seg + 1 < old_knots.knots.size(); ++seg) {
        const std::size_t lo = old_knots.knots[seg].tau;
        const std::size_t hi = old_knots.knots[seg + 1].tau;
        const double b_old_lo = old_knots.knots[seg].value;
        const double b_old_hi = old_knots.knots[seg + 1].value;
        const double b_new_lo = new_knots.knots[seg].value;
        const double b_new_hi = new_knots.knots[seg + 1].value;
        b[hi] = b_new_hi;
        const double den = b_old_hi - b_old_lo;
        if (std::fabs(den) <= eps_den) {
            ++res.degenerate_segments;
            const double inv_len = 1.0 / static_cast<double>(hi - lo);
            for (std::size_t i = lo + 1; i < hi; ++i)
                b[i] = b_new_lo + static_cast<double>(i - lo) * inv_len * (b_new_hi - b_new_lo);
        } else {
            const double ratio = (b_new_hi - b_new_lo) / den;
            for (std::size_t i = lo + 1; i < hi; ++i)
                b[i] = b_new_lo + ratio * (baseline[i] - b_old_lo);
        }
    }
    for (std::size_t i = 0; i < n; ++i) res.rotation.values[i] = baseline[i] - b[i];
    return res;
}

ItdDecomposition decompose(const TimeSeries& series, BoundaryPolicy boundary) {
    validate_series(series);
    ItdDecomposition d;
    d.input = series;
    d.boundary = boundary;
    if (series.size() < 3) return d;

    const TimeSeries* current = &d.input;
    while (!find_extrema(*current).interior.empty()) {
        BaselineStepResult step = baseline_step(*current, boundary);
        if (step.baseline.values == current->values) {
            // Exact fixed point of the update map at float resolution (seen
            // with periodic boundaries when a 1-ulp dip survives rounding);
            // iterating further would repeat the same baseline forever.
            break;
        }
        ItdLevel level;
        level.level = static_cast<int>(d.levels.size()) + 1;
        level.baseline = std::move(step.baseline);
        level.rotation = std::move(step.rotation);
        level.baseline_knots = std::move(step.knots);
        level.degenerate_segments = step.degenerate_segments;
        d.levels.push_back(std::move(level));
        current = &d.levels.back().baseline;
        if (d.levels.size() > kMaxLevels)
            throw Error(Status::Numeric,
                        "NoTermination: decomposition exceeded " + std::to_string(kMaxLevels) +
                            " levels");
    }
    return d;
}

TimeSeries reconstruct(const ItdDecomposition& decomp) {
    if (decomp.levels.empty()) return decomp.input;
    TimeSeries out = decomp.levels.back().baseline;
    for (const auto& level : decomp.levels)
        for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += level.rotation[i];
    out.label = decomp.input.label;
    return out;
}

} // namespace tendex
