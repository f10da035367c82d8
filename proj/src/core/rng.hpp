#pragma once

#include <cstdint>

namespace tendex {

// Deterministic PRNG stack, fixed for the lifetime of the repository so that
// golden files stay valid: xoshiro256++ (Blackman & Vigna, 2019) seeded
// through splitmix64 (Steele, Lea & Flood, 2014), with Gaussian variates by
// the Box-Muller transform. All integer paths are bit-reproducible across
// platforms; Gaussian/uniform doubles additionally depend on the platform's
// libm only through sqrt/log/cos/sin.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform01_open_below() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// Standard normal variates via Box-Muller; generates pairs and caches the
/// second value. Draw order from the underlying stream is fixed.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next();

    Xoshiro256pp& engine() { return rng_; }

private:
    Xoshiro256pp rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace tendex
