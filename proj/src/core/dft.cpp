#include "core/dft.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace tendex {

namespace {

using cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform; sign = -1 forward, +1 inverse
// (inverse is unscaled).
void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Bluestein chirp-z: expresses an arbitrary-length DFT as a convolution,
// carried out with power-of-two transforms. Chirp exponents are reduced
// mod 2n before the angle is formed to keep precision at large k.
std::vector<cplx> dft_bluestein(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> w(n); // w[k] = exp(-i*pi*k^2/n)
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % (2 * n);
        const double ang = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        w[k] = cplx(std::cos(ang), std::sin(ang));
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cplx> a(m, cplx(0.0, 0.0)), b(m, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * w[k];
    b[0] = std::conj(w[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(w[k]);
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_pow2(a, +1);
    const double scale = 1.0 / static_cast<double>(m);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * w[k];
    return out;
}

} // namespace

std::vector<cplx> dft_complex(const TimeSeries& series) {
    validate_series(series);
    const std::size_t n = series.size();
    if (n == 1) return {cplx(series[0], 0.0)};
    if (is_pow2(n)) {
        std::vector<cplx> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = cplx(series[i], 0.0);
        fft_pow2(a, -1);
        return a;
    }
    return dft_bluestein(series.values);
}

SpectrumReport dft_modulus(const TimeSeries& series) {
    const auto spectrum = dft_complex(series);
    SpectrumReport report;
    report.label = series.label;
    report.modulus.resize(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) report.modulus[k] = std::abs(spectrum[k]);
    return report;
}

ResidualSpectra residual_spectrum_report(const TimeSeries& original,
                                         const TimeSeries& itd_residual,
                                         const TimeSeries& hp_residual, std::size_t max_bin) {
    if (original.size() != itd_residual.size() || original.size() != hp_residual.size())
        throw Error(Status::InvalidArgument, "LengthMismatch: residual spectra need equal lengths");

    ResidualSpectra out{dft_modulus(original), dft_modulus(itd_residual), dft_modulus(hp_residual)};
    const std::size_t cut = std::min(max_bin, original.size());
    out.original.modulus.resize(cut);
    out.itd_residual.modulus.resize(cut);
    out.hp_residual.modulus.resize(cut);
    return out;
}

} // namespace tendex
