#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "core/series.hpp"

namespace tendex {

/// |X_k| for k = 0..N-1; bin indices are implicit.
struct SpectrumReport {
    std::vector<double> modulus;
    std::string label;
};

/// Full complex DFT X_k = sum_i Y(i) * exp(-2*pi*i*k/N). Power-of-two sizes
/// use an iterative radix-2 transform, everything else goes through
/// Bluestein's chirp-z reduction; both are O(N log N).
std::vector<std::complex<double>> dft_complex(const TimeSeries& series);

SpectrumReport dft_modulus(const TimeSeries& series);

struct ResidualSpectra {
    SpectrumReport original;
    SpectrumReport itd_residual;
    SpectrumReport hp_residual;
};

/// The three spectra truncated to bins < max_bin (clamped to N), suitable for
/// the low-frequency residual comparison. Throws LengthMismatch when the
/// series disagree in length.
ResidualSpectra residual_spectrum_report(const TimeSeries& original,
                                         const TimeSeries& itd_residual,
                                         const TimeSeries& hp_residual, std::size_t max_bin);

} // namespace tendex
