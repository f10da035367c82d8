#include "core/hp.hpp"

#include <cmath>
#include <vector>

#include "core/errors.hpp"

namespace tendex {

namespace {

// Symmetric pentadiagonal SPD solve via in-place Cholesky (bandwidth 2).
// Bands: d = main diagonal, e1 = first superdiagonal, e2 = second.
void solve_banded_spd(std::vector<double>& d, std::vector<double>& e1, std::vector<double>& e2,
                      std::vector<double>& x) {
    const std::size_t n = d.size();
    // factorize A = L D L' with unit lower-triangular L (two subdiagonals)
    for (std::size_t i = 0; i < n; ++i) {
        double di = d[i];
        if (i >= 1) di -= e1[i - 1] * e1[i - 1] * d[i - 1];
        if (i >= 2) di -= e2[i - 2] * e2[i - 2] * d[i - 2];
        d[i] = di;
        if (i + 1 < n) {
            double v = e1[i];
            if (i >= 1) v -= e1[i - 1] * e2[i - 1] * d[i - 1];
            e1[i] = v / d[i];
        }
        if (i + 2 < n) e2[i] = e2[i] / d[i];
    }
    // forward substitution L z = x
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 1) x[i] -= e1[i - 1] * x[i - 1];
        if (i >= 2) x[i] -= e2[i - 2] * x[i - 2];
    }
    // diagonal
    for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
    // back substitution L' x = z
    for (std::size_t ii = n; ii-- > 0;) {
        if (ii + 1 < n) x[ii] -= e1[ii] * x[ii + 1];
        if (ii + 2 < n) x[ii] -= e2[ii] * x[ii + 2];
    }
}

} // namespace

HpResult hp_trend(const TimeSeries& series, double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw Error(Status::InvalidArgument,
                    "InvalidLambda: smoothing parameter must be finite and >= 0");
    validate_series(series);

    const std::size_t n = series.size();
    HpResult res;
    res.lambda = lambda;

    if (lambda == 0.0 || n < 3) {
        res.trend = series;
        res.residual.values.assign(n, 0.0);
        return res;
    }

    // K = D'D from the (n-2) second-difference rows [1, -2, 1].
    std::vector<double> d(n, 0.0), e1(n - 1, 0.0), e2(n - 2, 0.0);
    for (std::size_t r = 0; r + 2 < n; ++r) {
        d[r] += 1.0;
        d[r + 1] += 4.0;
        d[r + 2] += 1.0;
        e1[r] += -2.0;
        e1[r + 1] += -2.0;
        e2[r] += 1.0;
    }
    // rhs = -lambda * K * Y, then solve (I + lambda K) E = rhs and H = Y + E.
    const auto& y = series.values;
    std::vector<double> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = d[i] * y[i];
        if (i >= 1) acc += e1[i - 1] * y[i - 1];
        if (i + 1 < n) acc += e1[i] * y[i + 1];
        if (i >= 2) acc += e2[i - 2] * y[i - 2];
        if (i + 2 < n) acc += e2[i] * y[i + 2];
        rhs[i] = -lambda * acc;
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = 1.0 + lambda * d[i];
    for (auto& v : e1) v *= lambda;
    for (auto& v : e2) v *= lambda;
    solve_banded_spd(d, e1, e2, rhs);

    res.trend.values.resize(n);
    res.residual.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        res.trend.values[i] = y[i] + rhs[i];
        res.residual.values[i] = y[i] - res.trend.values[i];
    }
    return res;
}

double hp_gain(double omega, double lambda) {
    const double c = 1.0 - std::cos(omega);
    const double g = 4.0 * lambda * c * c;
    return g / (1.0 + g);
}

} // namespace tendex
