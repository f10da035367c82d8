#pragma once

#include "core/series.hpp"

namespace tendex {

/// Augmented Dickey-Fuller test result for the constant-plus-trend regression
///   dy(i) = alpha + beta*i + gamma*y(i-1) + sum_m delta_m * dy(i-m) + eps(i).
/// Small p-values reject the unit root, i.e. indicate stationarity.
struct AdfResult {
    double gamma_hat = 0.0; ///< coefficient on the lagged level
    double t_stat = 0.0;    ///< t-statistic of gamma
    double p_value = 1.0;   ///< MacKinnon response-surface approximation
    int n_lags = 0;         ///< number of lagged-difference regressors
    int n_obs = 0;          ///< effective observations after lagging
};

/// Runs the ADF test with `n_lags` lagged-difference terms (default 1).
/// Throws SeriesTooShort when size < n_lags + 10 and propagates RankDeficient
/// from the regression (e.g. constant input).
AdfResult adf_pvalue(const TimeSeries& series, int n_lags = 1);

/// MacKinnon (1994) response-surface p-value for the constant-plus-trend
/// variant, clamped to [0.001, 0.999] outside the tabulated statistic range.
double mackinnon_pvalue_ct(double t_stat);

} // namespace tendex
