#pragma once

#include <array>
#include <cstdint>

#include "core/series.hpp"

namespace tendex {

/// Euler-Maruyama path of dY = -(Y^5 - 2Y^4 + 3Y^2) dt + dW. Output length
/// is n + 1 (the initial value is included).
struct SdeParams {
    std::uint64_t seed = 0;
    std::size_t n = 2000;
    double dt = 0.05;
    double y0 = 0.5;
    double noise_variance = 1.0;
};
TimeSeries gen_sde(const SdeParams& params);

/// sin(0.01 * i) plus Gaussian noise, i = 0..floor(200*pi)-1 (628 samples).
struct NoisySineParams {
    std::uint64_t seed = 0;
    double noise_variance = 0.1;
};
TimeSeries gen_noisy_sine(const NoisySineParams& params);

/// Three superposed piecewise-constant Uniform[0,1] layers: layer k has
/// amplitude 10^(k-1) and block length 10^k samples, i.e. Y(i) =
/// sum_k 10^(k-1) * U(k, floor(i / 10^k)) with 100/10/1 values per layer at
/// the default length (the third layer is a constant offset). Layers can be
/// masked out individually for testing.
struct MultiscaleParams {
    std::uint64_t seed = 0;
    std::size_t n = 1000;
    std::array<bool, 3> layers{true, true, true};
};
TimeSeries gen_multiscale(const MultiscaleParams& params);

/// 10 t^3 cos(13 t^3) sin(31 pi t) on t = 0.00..2.00 step 0.01; length 201,
/// fully deterministic.
TimeSeries gen_chirp();

} // namespace tendex
