#pragma once

#include "core/series.hpp"

namespace tendex {

/// Hodrick-Prescott split: trend + residual == input exactly.
struct HpResult {
    TimeSeries trend;
    TimeSeries residual;
    double lambda = 0.0;
};

/// Penalized least-squares trend: H minimizes
///   sum (Y - H)^2 + lambda * sum (second difference of H)^2,
/// solved through the pentadiagonal SPD system (I + lambda D'D) H = Y with a
/// banded Cholesky factorization. Internally solves for the correction
/// E = H - Y (right-hand side -lambda D'D Y), which makes lambda == 0 and
/// exactly-linear inputs return H == Y bit-for-bit. Throws InvalidLambda for
/// negative or non-finite lambda.
HpResult hp_trend(const TimeSeries& series, double lambda);

/// Transfer-function gain 4*lambda*(1-cos w)^2 / (1 + 4*lambda*(1-cos w)^2);
/// empirically this is the gain of the RESIDUAL (it vanishes at w = 0), so
/// the trend-side gain is 1 minus this value.
double hp_gain(double omega, double lambda);

} // namespace tendex
