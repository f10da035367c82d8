#include "core/signals.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace tendex {

TimeSeries gen_sde(const SdeParams& params) {
    if (params.n < 1 || params.dt <= 0.0 || params.noise_variance < 0.0)
        throw Error(Status::InvalidArgument, "InvalidSdeParams: need n >= 1, dt > 0, variance >= 0");

    GaussianSampler gauss(params.seed);
    const double noise_scale = std::sqrt(params.dt) * std::sqrt(params.noise_variance);

    TimeSeries out;
    out.label = "sde";
    out.values.resize(params.n + 1);
    out.values[0] = params.y0;
    for (std::size_t m = 0; m < params.n; ++m) {
        const double y = out.values[m];
        const double y2 = y * y;
        const double drift = -(y2 * y2 * y - 2.0 * y2 * y2 + 3.0 * y2);
        out.values[m + 1] = y + drift * params.dt + noise_scale * gauss.next();
        if (std::fabs(out.values[m + 1]) > 1e6)
            throw Error(Status::Numeric,
                        "NumericalBlowup: |Y| exceeded 1e6 at step " + std::to_string(m + 1) +
                            "; the Euler-Maruyama step is unstable for this seed, reseed advised");
    }
    return out;
}

TimeSeries gen_noisy_sine(const NoisySineParams& params) {
    if (params.noise_variance < 0.0)
        throw Error(Status::InvalidArgument, "InvalidNoiseVariance: variance must be >= 0");
    const std::size_t n = static_cast<std::size_t>(std::floor(200.0 * std::numbers::pi));
    GaussianSampler gauss(params.seed);
    const double sd = std::sqrt(params.noise_variance);

    TimeSeries out;
    out.label = "noisy-sine";
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = std::sin(0.01 * static_cast<double>(i)) + sd * gauss.next();
    return out;
}

TimeSeries gen_multiscale(const MultiscaleParams& params) {
    if (params.n < 1)
        throw Error(Status::InvalidArgument, "InvalidLength: need n >= 1");

    Xoshiro256pp rng(params.seed);
    // Draw order is fixed: fine layer first, then the coarser ones.
    std::array<std::vector<double>, 3> layer;
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t block = 10;
        for (std::size_t b = 0; b < k; ++b) block *= 10;
        const std::size_t count = (params.n + block - 1) / block;
        layer[k].resize(count);
        for (auto& u : layer[k]) u = rng.uniform01();
    }

    TimeSeries out;
    out.label = "multiscale";
    out.values.assign(params.n, 0.0);
    double amp = 1.0;
    std::size_t block = 10;
    for (std::size_t k = 0; k < 3; ++k) {
        if (params.layers[k]) {
            for (std::size_t i = 0; i < params.n; ++i)
                out.values[i] += amp * layer[k][i / block];
        }
        amp *= 10.0;
        block *= 10;
    }
    return out;
}

TimeSeries gen_chirp() {
    TimeSeries out;
    out.label = "chirp";
    out.values.resize(201);
    for (std::size_t i = 0; i <= 200; ++i) {
        const double t = 0.01 * static_cast<double>(i);
        const double t3 = t * t * t;
        out.values[i] = 10.0 * t3 * std::cos(13.0 * t3) * std::sin(31.0 * std::numbers::pi * t);
    }
    return out;
}

} // namespace tendex
