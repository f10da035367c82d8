#include "core/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/adf.hpp"
#include "core/errors.hpp"

namespace tendex {

double prominence(const TimeSeries& series, std::size_t position) {
    const auto extrema = find_extrema(series);
    const auto positions = extrema.knot_positions();
    for (std::size_t m = 1; m + 1 < positions.size(); ++m) {
        if (positions[m] != position) continue;
        const bool is_interior =
            std::any_of(extrema.interior.begin(), extrema.interior.end(),
                        [&](const Extremum& e) { return e.pos == position; });
        if (!is_interior) break;
        const double v = series[positions[m]];
        return std::min(std::fabs(v - series[positions[m - 1]]),
                        std::fabs(v - series[positions[m + 1]]));
    }
    throw Error(Status::InvalidArgument,
                "NotAnExtremum: position " + std::to_string(position) +
                    " is not an interior extremum");
}

double maxep(const TimeSeries& series) {
    const auto extrema = find_extrema(series);
    if (extrema.interior.empty()) return 0.0;
    const auto positions = extrema.knot_positions();
    double best = 0.0;
    for (std::size_t m = 1; m + 1 < positions.size(); ++m) {
        const double v = series[positions[m]];
        const double p = std::min(std::fabs(v - series[positions[m - 1]]),
                                  std::fabs(v - series[positions[m + 1]]));
        best = std::max(best, p);
    }
    return best;
}

double extrema_difference_sum(const TimeSeries& series) {
    const auto positions = find_extrema(series).knot_positions();
    double sum = 0.0;
    for (std::size_t m = 1; m < positions.size(); ++m)
        sum += std::fabs(series[positions[m]] - series[positions[m - 1]]);
    return sum;
}

CriterionTrace stc_select(const ItdDecomposition& decomp, double p_star, int n_lags) {
    const std::size_t depth = decomp.depth();
    if (depth == 0)
        throw Error(Status::InvalidArgument, "EmptyDecomposition: no levels to select from");

    CriterionTrace trace;
    trace.criterion = Criterion::Stc;
    trace.chosen = static_cast<int>(depth);
    trace.fallback_used = true;
    for (std::size_t j = 1; j < depth; ++j) {
        const double p = adf_pvalue(decomp.rotation(j + 1), n_lags).p_value;
        trace.per_level.push_back({static_cast<int>(j), p});
        if (p > p_star) {
            trace.chosen = static_cast<int>(j);
            trace.fallback_used = false;
            break;
        }
    }
    return trace;
}

CriterionTrace maxep_select(const ItdDecomposition& decomp) {
    const std::size_t depth = decomp.depth();
    if (depth == 0)
        throw Error(Status::InvalidArgument, "EmptyDecomposition: no levels to select from");

    CriterionTrace trace;
    trace.criterion = Criterion::MaxEp;
    std::vector<double> m(depth + 1);
    for (std::size_t j = 0; j <= depth; ++j) {
        m[j] = maxep(decomp.baseline(j));
        trace.per_level.push_back({static_cast<int>(j), m[j]});
    }
    double best_drop = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < depth; ++j) {
        const double drop = m[j + 1] - m[j];
        if (drop < best_drop) {
            best_drop = drop;
            best_j = j;
        }
    }
    trace.chosen = static_cast<int>(best_j);
    return trace;
}

TendencySplit tendency(const TimeSeries& series, const TendencyParams& params) {
    const ItdDecomposition decomp = decompose(series, params.boundary);

    TendencySplit split;
    split.depth = decomp.depth();
    if (decomp.depth() == 0) {
        split.j_star = 0;
        split.tendency = series;
        split.residual.values.assign(series.size(), 0.0);
        split.trace.criterion = params.criterion;
        split.trace.chosen = 0;
        return split;
    }

    split.trace = params.criterion == Criterion::Stc
                      ? stc_select(decomp, params.p_star, params.n_lags)
                      : maxep_select(decomp);
    split.j_star = split.trace.chosen;
    split.tendency = decomp.baseline(static_cast<std::size_t>(split.j_star));
    split.residual.values.resize(series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        split.residual.values[i] = series[i] - split.tendency[i];
    return split;
}

} // namespace tendex
