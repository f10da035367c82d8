#include "core/adf.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/ols.hpp"

namespace tendex {

namespace {

// MacKinnon (1994) response-surface coefficients for the single-series
// constant-plus-trend ("ct") regression; p = Phi(c0 + c1*t + c2*t^2 [+ c3*t^3])
// with the small-statistic polynomial below tau_star and the large-statistic
// one above it.
constexpr double kTauMax = 0.7;
constexpr double kTauMin = -16.18;
constexpr double kTauStar = -2.89;
constexpr double kSmallP[3] = {3.2512, 1.6047, 0.049588};
constexpr double kLargeP[4] = {2.5261, 0.61654, -0.37956, -0.060285};

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace

double mackinnon_pvalue_ct(double t_stat) {
    if (t_stat > kTauMax) return 0.999;
    if (t_stat < kTauMin) return 0.001;
    double z;
    if (t_stat <= kTauStar) {
        z = kSmallP[0] + t_stat * (kSmallP[1] + t_stat * kSmallP[2]);
    } else {
        z = kLargeP[0] + t_stat * (kLargeP[1] + t_stat * (kLargeP[2] + t_stat * kLargeP[3]));
    }
    return norm_cdf(z);
}

AdfResult adf_pvalue(const TimeSeries& series, int n_lags) {
    if (n_lags < 0)
        throw Error(Status::InvalidArgument, "InvalidLagCount: n_lags must be >= 0");
    const std::size_t n = series.size();
    if (n < static_cast<std::size_t>(n_lags) + 10)
        throw Error(Status::SeriesTooShort,
                    "SeriesTooShort: ADF needs at least n_lags + 10 samples, got " +
                        std::to_string(n));

    const auto& y = series.values;
    const int n_obs = static_cast<int>(n) - 1 - n_lags;
    const int n_cols = 3 + n_lags; // const, trend, lagged level, lagged diffs

    Eigen::MatrixXd design(n_obs, n_cols);
    Eigen::VectorXd response(n_obs);
    for (int r = 0; r < n_obs; ++r) {
        const std::size_t t = static_cast<std::size_t>(r + n_lags + 1);
        response(r) = y[t] - y[t - 1];
        design(r, 0) = 1.0;
        design(r, 1) = static_cast<double>(r + 1); // trend over the regression sample
        design(r, 2) = y[t - 1];
        for (int m = 1; m <= n_lags; ++m) design(r, 2 + m) = y[t - m] - y[t - m - 1];
    }

    const OlsFit fit = ols_fit(design, response);
    AdfResult res;
    res.gamma_hat = fit.coefficients(2);
    res.t_stat = fit.coefficients(2) / fit.standard_errors(2);
    res.p_value = mackinnon_pvalue_ct(res.t_stat);
    res.n_lags = n_lags;
    res.n_obs = n_obs;
    return res;
}

} // namespace tendex
