#pragma once

#include <cstddef>
#include <vector>

#include "core/itd.hpp"
#include "core/series.hpp"

namespace tendex {

enum class Criterion { Stc, MaxEp };

struct CriterionScore {
    int level;
    double score;
};

/// Per-level scores and the chosen tendency level. For STC the score at
/// level j is the ADF p-value of rotation R^{j+1} (levels 1..D-1); for MaxEP
/// it is maxep(B^j) (levels 0..D). STC chooses in 1..D, MaxEP in 0..D-1.
struct CriterionTrace {
    Criterion criterion = Criterion::Stc;
    std::vector<CriterionScore> per_level;
    int chosen = 0;
    bool fallback_used = false;
};

/// Y = T + r with T = B^{j*}; r is computed as Y - T so the split is exact.
struct TendencySplit {
    int j_star = 0;
    std::size_t depth = 0; ///< D of the underlying decomposition
    TimeSeries tendency;
    TimeSeries residual;
    CriterionTrace trace;
};

/// Local prominence of the interior extremum at `position`:
/// min(|Y(tau) - Y(prev)|, |Y(tau) - Y(next)|) over the neighboring extrema,
/// with the series endpoints acting as neighbors for the first and last
/// interior extremum. Throws NotAnExtremum otherwise.
double prominence(const TimeSeries& series, std::size_t position);

/// Maximum prominence over all interior extrema; 0 when there are none.
double maxep(const TimeSeries& series);

/// Sum of |Y(tau_k) - Y(tau_{k-1})| over consecutive knots (endpoints
/// included); equals the total variation of the series because it is
/// monotone between adjacent extrema.
double extrema_difference_sum(const TimeSeries& series);

/// Stationarity-test criterion: the smallest level j >= 1 whose successor
/// rotation R^{j+1} has ADF p-value above p_star; falls back to j = D (with
/// fallback_used set) when every tested rotation stays below the threshold.
CriterionTrace stc_select(const ItdDecomposition& decomp, double p_star = 0.05, int n_lags = 1);

/// Maximum-extrema-prominence criterion: with m_j = maxep(B^j), chooses the
/// level j in 0..D-1 minimizing m_{j+1} - m_j (the step whose smoothing
/// erases the most prominence), ties broken toward the smallest j.
CriterionTrace maxep_select(const ItdDecomposition& decomp);

struct TendencyParams {
    Criterion criterion = Criterion::Stc;
    BoundaryPolicy boundary = BoundaryPolicy::Free;
    double p_star = 0.05;
    int n_lags = 1;
};

/// Decomposes, selects j* by the requested criterion and returns the split.
/// A depth-0 decomposition yields T = Y, r = 0, j* = 0.
TendencySplit tendency(const TimeSeries& series, const TendencyParams& params);

} // namespace tendex
